from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

from catalog.graph6 import emit_graph6, parse_graph6
from cores.exact_core import char_poly
from cores.spectrum_core import eigenvalues
from families.constructors import build_family, parse_family_spec
from families.recognizers import ClassificationRecord, classify
from harness.analysis import analyze
from harness.models import AnalysisReport
from utils.errors import CapacityError, InputError, NumericalFailure, ToolkitError
from utils.logger import get_system_logger, log_exception

router = APIRouter()


class GraphRequest(BaseModel):
    graph6: str


class SpectrumRequest(BaseModel):
    graph6: str
    charpoly: bool = False


class SpectrumResponse(BaseModel):
    graph6: str
    eigenvalues: List[float]
    energy: float
    positive_count: int
    char_poly: Optional[List[int]] = None


class FamilyResponse(BaseModel):
    spec: str
    graph6: str
    n: int
    m: int


def _http_error(e: ToolkitError, context: str) -> HTTPException:
    log_exception(get_system_logger(), e, context)
    if isinstance(e, InputError):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, (CapacityError, NumericalFailure)):
        return HTTPException(status_code=422, detail=str(e))
    return HTTPException(status_code=500, detail=str(e))


@router.get("/health")
def health_check():
    """
    Проверка состояния сервиса.
    """
    return {"status": "healthy"}


@router.post("/analyze", response_model=AnalysisReport)
def analyze_endpoint(request: GraphRequest):
    """Полный отчет по графу в graph6"""
    try:
        return analyze(parse_graph6(request.graph6))
    except ToolkitError as e:
        raise _http_error(e, "analyze") from e


@router.post("/classify", response_model=ClassificationRecord)
def classify_endpoint(request: GraphRequest):
    try:
        return classify(parse_graph6(request.graph6))
    except ToolkitError as e:
        raise _http_error(e, "classify") from e


@router.post("/spectrum", response_model=SpectrumResponse)
def spectrum_endpoint(request: SpectrumRequest):
    try:
        g = parse_graph6(request.graph6)
        spectrum = eigenvalues(g)
        poly = char_poly(g).coeffs if request.charpoly else None
    except ToolkitError as e:
        raise _http_error(e, "spectrum") from e
    return SpectrumResponse(graph6=emit_graph6(g), eigenvalues=spectrum.eigenvalues,
                            energy=spectrum.energy, positive_count=spectrum.positive_count,
                            char_poly=poly)


@router.get("/family", response_model=FamilyResponse)
def family_endpoint(spec: str):
    """Построение графа семейства: /family?spec=family:A:7,4"""
    try:
        family = parse_family_spec(spec)
        g = build_family(family)
        graph6 = emit_graph6(g)
    except ToolkitError as e:
        raise _http_error(e, "family") from e
    return FamilyResponse(spec=family.label(), graph6=graph6, n=g.n, m=g.m)
