from fastapi import FastAPI

from app.api.polynomials import router as polynomials_router
from app.api.posets import router as posets_router
from app.core.exception_handler import register_exception_handlers
from app.core.logging import setup_logging
from app.core.settings import settings

setup_logging(settings.log_level)

app = FastAPI(
    title="ordercheck",
    version="0.1.0",
    description="Exact Ehrhart and h*-vector computations for order polytopes of finite posets.",
)

register_exception_handlers(app)

app.include_router(posets_router)
app.include_router(polynomials_router)
