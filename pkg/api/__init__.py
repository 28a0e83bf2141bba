from .endpoints import router
from .cli import main

__all__ = ['router', 'main']
