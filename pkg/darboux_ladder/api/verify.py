"""Suite and single-operation endpoints; the work runs in the threadpool."""

from typing import List

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from ..manager import verification_manager
from ..models.requests import FactorizeRequest, GenerateRequest, LadderRequest, VerifyRequest
from ..models.responses import ErrorResponse, FactorizationRecord, GenerateResponse, LadderRecord, RunReport

router = APIRouter(
    tags=["darboux"],
    responses={422: {"model": ErrorResponse, "description": "Inadmissible family or ladder step"}},
)


@router.post("/verify", response_model=RunReport, response_model_exclude_none=True)
async def verify(request: VerifyRequest):
    """Run the identity suite; a failed check is reported in ``status``, not as an HTTP error."""
    return await run_in_threadpool(verification_manager.run_suite, request)


@router.post("/factorize", response_model=List[FactorizationRecord])
async def factorize(request: FactorizeRequest):
    return await run_in_threadpool(verification_manager.factorize, request)


@router.post("/ladder", response_model=LadderRecord)
async def ladder(request: LadderRequest):
    return await run_in_threadpool(verification_manager.ladder, request)


@router.post("/generate", response_model=GenerateResponse)
async def generate(request: GenerateRequest):
    return await run_in_threadpool(verification_manager.generate, request)
