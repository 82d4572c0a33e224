"""FastAPI application exposing the Darboux ladder operations."""

import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .api.families import router as families_router
from .api.health import router as health_router
from .api.verify import router as verify_router
from .config import Config
from .manager import verification_manager
from .models.responses import ErrorResponse
from .utils.exceptions import DarbouxError

logger = logging.getLogger(__name__)

config = Config.from_env()


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan context manager."""
    verification_manager.configure(config.verify)
    logger.info("Darboux ladder server ready (max_workers=%d)", config.verify.max_workers)

    yield

    logger.info("Darboux ladder server shut down after %d suite runs", verification_manager.total_runs)


app = FastAPI(
    title="Darboux Ladder Server",
    description="Exact discrete Darboux factorization and ladder operators for hypergeometric families",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(DarbouxError)
async def darboux_error_handler(request: Request, exc: DarbouxError):
    return JSONResponse(status_code=422, content=ErrorResponse(detail=str(exc)).model_dump())


app.include_router(health_router)
app.include_router(families_router)
app.include_router(verify_router)


def main():
    """Main entry point for the server."""
    logging.basicConfig(level=getattr(logging, config.server.log_level.upper(), logging.INFO))
    uvicorn.run(
        "darboux_ladder.main:app",
        host=config.server.host,
        port=config.server.port,
        log_level=config.server.log_level,
    )


if __name__ == "__main__":
    main()
