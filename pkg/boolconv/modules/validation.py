"""Validações da configuração de uma execução antes de qualquer trabalho."""

from typing import Iterable, List, Optional, Tuple

from boolconv.modules.errors import BoolconvError
from boolconv.modules.i18n import t
from boolconv.modules.settings import MAX_ATOMS_BRUTE_FORCE, MAX_ATOMS_TOPOLOGY


class ValidationError(BoolconvError):
    """Erro de validação (uso incorreto da CLI ou config inválida)."""

    exit_code = 2

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__('; '.join(self.errors))


def validate_atoms(atoms: int, cap: int = MAX_ATOMS_TOPOLOGY) -> Tuple[bool, Optional[str]]:
    """Número de átomos precisa ser positivo e caber no limite."""
    if atoms < 1:
        return False, t("validation_atoms_positive", atoms=atoms)
    if atoms > cap:
        return False, t("validation_atoms_cap", atoms=atoms, cap=cap)
    return True, None


def validate_samples(samples: int, name: str = 'samples') -> Tuple[bool, Optional[str]]:
    if samples < 1:
        return False, t("validation_samples_positive", name=name, value=samples)
    return True, None


def validate_bounds(prefix_bound: Optional[int], cycle_bound: Optional[int]) -> Tuple[bool, Optional[str]]:
    """Prefixo pode ser vazio, ciclo não."""
    if prefix_bound is not None and prefix_bound < 0:
        return False, t("validation_prefix_bound", value=prefix_bound)
    if cycle_bound is not None and cycle_bound < 1:
        return False, t("validation_cycle_bound", value=cycle_bound)
    return True, None


def validate_seed(seed: int) -> Tuple[bool, Optional[str]]:
    """Seed é um inteiro de 64 bits sem sinal."""
    if not 0 <= seed < 1 << 64:
        return False, t("validation_seed_range", seed=seed)
    return True, None


def validate_suite_names(suites: Optional[Iterable[str]], known: Iterable[str]) -> Tuple[bool, Optional[str]]:
    if suites is None:
        return True, None
    known = list(known)
    unknown = [s for s in suites if s not in known]
    if unknown:
        return False, t("validation_suite_unknown", suites=', '.join(unknown), known=', '.join(known))
    return True, None


def validate_brute_force(max_atoms: int, suites: Optional[Iterable[str]]) -> Tuple[bool, Optional[str]]:
    """Pedir a suite de maximalidade explicitamente limita o número de átomos."""
    if suites is not None and 'maximality' in suites and max_atoms > MAX_ATOMS_BRUTE_FORCE:
        return False, t("validation_brute_force_cap", atoms=max_atoms, cap=MAX_ATOMS_BRUTE_FORCE)
    return True, None


def run_all_validations(
    max_atoms: int,
    prefix_bound: Optional[int] = None,
    cycle_bound: Optional[int] = None,
    seed: int = 0,
    samples: int = 1,
    selector_samples: int = 1,
    suites: Optional[Iterable[str]] = None,
    known_suites: Iterable[str] = (),
) -> List[str]:
    """Roda todas as validações e retorna lista de erros (vazia se tudo OK)."""
    errors: List[str] = []
    suites = None if suites is None else list(suites)

    checks = [
        validate_atoms(max_atoms),
        validate_bounds(prefix_bound, cycle_bound),
        validate_seed(seed),
        validate_samples(samples),
        validate_samples(selector_samples, 'selector_samples'),
        validate_suite_names(suites, known_suites),
        validate_brute_force(max_atoms, suites),
    ]
    for valid, error in checks:
        if not valid and error:
            errors.append(error)

    return errors
