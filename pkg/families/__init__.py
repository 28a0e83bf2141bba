from .constructors import FamilySpec, build_family, parse_family_spec
from .recognizers import ClassificationRecord, classify, classify_theorem_ab

__all__ = ['FamilySpec', 'build_family', 'parse_family_spec',
           'ClassificationRecord', 'classify', 'classify_theorem_ab']
