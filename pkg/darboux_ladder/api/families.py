"""Built-in family listing."""

from typing import List

from fastapi import APIRouter

from ..families import FAMILIES
from ..models.responses import FamilyInfoResponse

router = APIRouter(prefix="/families", tags=["families"])


@router.get("", response_model=List[FamilyInfoResponse])
async def list_families():
    """Built-in families with parameter names and admissible ranges."""
    return [
        FamilyInfoResponse(family=info.kind.value, parameters=list(info.parameters), admissible=info.admissible)
        for info in FAMILIES.values()
    ]
