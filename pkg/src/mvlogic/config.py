from __future__ import annotations

import os
from functools import lru_cache
from typing import Literal

import dotenv
from pydantic import BaseModel, Field, field_validator


DEFAULT_CELL_BUDGET = 2**28

LogLevel = Literal['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


class Settings(BaseModel):
    cell_budget: int = Field(DEFAULT_CELL_BUDGET, gt=0, description='largest table size (r^n) built in memory')
    log_level: LogLevel = Field('WARNING', description='level used by the CLI when --verbose is absent')
    enumerate_limit: int = Field(10, gt=0, description='default number of enumerated solutions')

    @field_validator('log_level', mode='before')
    @classmethod
    def _upper(cls, value: object) -> object:
        return value.upper() if isinstance(value, str) else value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    dotenv.load_dotenv()
    values = {
        'cell_budget': os.getenv('MVLOGIC_CELL_BUDGET'),
        'log_level': os.getenv('MVLOGIC_LOG_LEVEL'),
        'enumerate_limit': os.getenv('MVLOGIC_ENUMERATE_LIMIT'),
    }
    return Settings.model_validate({k: v for k, v in values.items() if v is not None})


def reset_settings() -> None:
    get_settings.cache_clear()
