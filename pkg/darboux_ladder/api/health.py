"""Liveness and usage counters."""

from fastapi import APIRouter

from .. import __version__
from ..manager import verification_manager
from ..models.responses import HealthResponse, StatsResponse

router = APIRouter(tags=["health"])


def _alive() -> HealthResponse:
    return HealthResponse(status="ok", message=f"darboux-ladder {__version__} is running")


@router.get("/", response_model=HealthResponse)
async def root_health_check():
    return _alive()


@router.get("/health", response_model=HealthResponse)
async def health_check():
    return _alive()


@router.get("/stats", response_model=StatsResponse)
async def stats():
    """Seconds since startup and suite runs served."""
    return StatsResponse(uptime=verification_manager.uptime, total_runs=verification_manager.total_runs)
