from typing import Annotated

from fastapi import Depends

from app.core.settings import AlgorithmName, Settings, settings
from app.models.poset import Poset
from app.services.generation import check_element_count
from app.services.poset_formats import parse_poset_record


def get_settings() -> Settings:
    return settings


SettingsDep = Annotated[Settings, Depends(get_settings)]


def resolve_requested_algorithm(requested: AlgorithmName | None, app_settings: Settings) -> AlgorithmName:
    return requested or app_settings.algorithm


def load_request_poset(record: str, app_settings: Settings) -> Poset:
    poset = parse_poset_record(record)
    check_element_count(poset.p, app_settings.max_request_elements)
    return poset
