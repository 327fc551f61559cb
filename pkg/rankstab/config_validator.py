from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from rankstab.curve import CurveConfig
from rankstab.eisenstein import EisensteinConfig
from rankstab.pipeline.models import PipelineConfig
from rankstab.quad_ext import QuadExtConfig
from rankstab.selmer_local import SelmerLocalConfig
from rankstab.triple_sieve import SieveConfig


@dataclass(frozen=True)
class RuntimeConfigs:
    eisenstein: EisensteinConfig
    quad_ext: QuadExtConfig
    curve: CurveConfig
    selmer_local: SelmerLocalConfig
    triple_sieve: SieveConfig
    pipeline: PipelineConfig


class ConfigValidator:
    def validate_startup(self, path: str | Path = "config/runtime.json") -> RuntimeConfigs:
        configs = RuntimeConfigs(
            eisenstein=EisensteinConfig.from_runtime_file(path),
            quad_ext=QuadExtConfig.from_runtime_file(path),
            curve=CurveConfig.from_runtime_file(path),
            selmer_local=SelmerLocalConfig.from_runtime_file(path),
            triple_sieve=SieveConfig.from_runtime_file(path).with_env_overrides(),
            pipeline=PipelineConfig.from_runtime_file(path),
        )
        # from_runtime_file skips validation when the file is absent
        configs.eisenstein.validate()
        configs.quad_ext.validate()
        configs.curve.validate()
        configs.selmer_local.validate()
        configs.triple_sieve.validate()
        configs.pipeline.validate()
        return configs
