"""Pipeline configuration: thresholds, attempt budgets, endpoints, paths.

The config file is plain JSON. Budgets default to the two-tier scheme used
throughout (8 cheap attempts, then 2 reasoning attempts, for up to 3 rounds).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError


@dataclass
class EndpointSpec:
    """One model endpoint: chat-completion URL, model id, credential env var."""

    url: str = ""
    model: str = ""
    credential_env_var: str = ""


@dataclass
class PipelineConfig:
    include_dirs: list[str] = field(default_factory=list)
    preprocessor_defines: list[str] = field(default_factory=list)
    breakdown_threshold_fn: int = 4000
    breakdown_threshold_block: int = 800
    base_attempts: int = 8
    reasoning_attempts: int = 2
    max_rounds: int = 3
    culprit_shortlist_size: int = 3
    model_endpoints: dict[str, EndpointSpec] = field(default_factory=dict)
    icl_pool_path: str = "icl_pool"
    workspace_dir: str = "pipeline_ws"

    # Project-shape knobs. build_command/test_commands default to a one-binary
    # convention (gcc over every .c file, run the binary) when left empty.
    build_command: str = ""
    test_commands: list[str] = field(default_factory=list)
    test_source_patterns: list[str] = field(default_factory=lambda: ["test*.c", "*_test.c", "*_tests.c"])

    # Adaptive-ICL knobs (the similarity threshold is a config decision; no
    # published value exists for it).
    similarity_threshold: float = 0.75
    embedding_dim: int = 256

    # Validation knobs.
    test_timeout: float = 300.0

    # When set, the gateway is the deterministic scripted mock instead of an
    # HTTP backend.
    mock_script: str = ""

    def validate(self) -> None:
        if self.base_attempts < 1:
            raise ConfigError("base_attempts must be >= 1")
        if self.reasoning_attempts < 0:
            raise ConfigError("reasoning_attempts must be >= 0")
        if self.max_rounds < 1:
            raise ConfigError("max_rounds must be >= 1")
        if self.culprit_shortlist_size < 1:
            raise ConfigError("culprit_shortlist_size must be >= 1")
        if self.breakdown_threshold_block >= self.breakdown_threshold_fn:
            raise ConfigError("breakdown_threshold_block must be < breakdown_threshold_fn")
        for name, spec in self.model_endpoints.items():
            if name not in ("base", "reasoning", "icl_generator"):
                raise ConfigError(f"unknown model role: {name}")
            if not isinstance(spec, EndpointSpec):
                raise ConfigError(f"bad endpoint spec for role {name}")


def load_config(path: str | Path) -> PipelineConfig:
    """Read a JSON config file; unknown keys are rejected up front."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    return config_from_dict(raw)


def config_from_dict(raw: dict) -> PipelineConfig:
    known = {f for f in PipelineConfig.__dataclass_fields__}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    endpoints = {}
    for role, spec in (raw.get("model_endpoints") or {}).items():
        endpoints[role] = EndpointSpec(
            url=spec.get("url", ""),
            model=spec.get("model", ""),
            credential_env_var=spec.get("credential_env_var", ""),
        )
    raw = dict(raw)
    raw["model_endpoints"] = endpoints
    cfg = PipelineConfig(**raw)
    cfg.validate()
    return cfg
