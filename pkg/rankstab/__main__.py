from rankstab.pipeline.cli import main

raise SystemExit(main())
