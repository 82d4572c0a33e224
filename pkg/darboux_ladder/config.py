"""Configuration management for the Darboux ladder toolkit."""

import os

from pydantic import BaseModel, Field


class ServerConfig(BaseModel):
    """HTTP front end settings."""

    host: str = Field(default="127.0.0.1", description="Server host address")
    port: int = Field(default=8000, description="Server port")
    log_level: str = Field(default="info", description="Logging level")


class VerifyConfig(BaseModel):
    """Defaults for the identity suite."""

    n_max: int = Field(default=12, ge=0, description="Largest degree swept by default")
    reference_samples: int = Field(default=5, ge=0, description="Random parameter points for the reference comparison")
    sample_seed: int = Field(default=1997, description="Seed for the reference sample points")
    chain_steps: int = Field(default=10, ge=0, description="Links checked along the dressing chain")
    max_workers: int = Field(default=4, ge=1, description="Threads evaluating (n, branch) cells")


class Config(BaseModel):
    """Main configuration class."""

    server: ServerConfig = Field(default_factory=ServerConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)

    @classmethod
    def from_env(cls) -> "Config":
        """Create configuration from environment variables (server only; the CLI uses flags)."""
        return cls(
            server=ServerConfig(
                host=os.getenv("DARBOUX_LADDER_HOST", "127.0.0.1"),
                port=int(os.getenv("DARBOUX_LADDER_PORT", "8000")),
                log_level=os.getenv("DARBOUX_LADDER_LOG_LEVEL", "info"),
            ),
            verify=VerifyConfig(
                max_workers=int(os.getenv("DARBOUX_LADDER_WORKERS", "4")),
            ),
        )
