from __future__ import annotations
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        __format__ = str.__format__
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from config import BUDGET_DEFAULT, MAX_COLORS_DEFAULT
from errors import SpecError


class Mode(StrEnum):
    RAINBOW = "rainbow"; STRONG = "strong"

class Target(StrEnum):
    RC = "rc"; SRC = "src"

    @property
    def mode(self) -> Mode:
        return Mode.RAINBOW if self is Target.RC else Mode.STRONG

class SolveStatus(StrEnum):
    EXACT = "exact"
    BOUNDS = "bounds"                  # дошли до max_colors, раскраски нет
    BUDGET_EXCEEDED = "budget-exceeded"

class Variant(StrEnum):
    """Второй генератор в C_2k: {1,k} или {1,k+1}."""
    K = "k"; K_PLUS_1 = "k+1"

class Family(StrEnum):
    INTERVAL = "interval"          # C_n([k])
    C2K = "c2k"                    # C_2k({1,k}), C_2k({1,k+1})
    SQUARE = "square"              # C_(k-1)^2({1,k})
    MULTIPLE = "multiple"          # C_ak({1,k})
    COROLLARY = "corollary"        # C_2k+1({1,k+1})
    CIRCULANT = "circulant"        # произвольный C_n(S), распознаётся после нормализации
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    MULTIPARTITE = "multipartite"
    SUBCYCLE = "subcycle"
    DIRCYCLE = "dircycle"
    COMPLETE = "complete"


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class CirculantSpec(_Frozen):
    """C_n(S): вершины 0..n-1, дуги i -> i+s (mod n) для каждого s из S."""
    n: int
    S: tuple[int, ...]

    @field_validator("S", mode="before")
    @classmethod
    def _generators(cls, value):
        gens = list(value)
        if not gens:
            raise SpecError("Набор генераторов пуст")
        if len(set(gens)) != len(gens):
            raise SpecError(f"Повторяющиеся генераторы: {gens}")
        return tuple(sorted(int(s) for s in gens))

    @model_validator(mode="after")
    def _range(self) -> "CirculantSpec":
        if self.n < 2:
            raise SpecError(f"Модуль n={self.n} меньше 2")
        bad = [s for s in self.S if not 1 <= s <= self.n - 1]
        if bad:
            raise SpecError(f"Генераторы {bad} вне диапазона 1..{self.n - 1}")
        return self

    def label(self) -> str:
        return f"C_{self.n}({{{','.join(map(str, self.S))}}})"


class PairIndex(_Frozen):
    """Вершина v_i как пара <r, s>: i = r*base + s."""
    r: int
    s: int
    base: PositiveInt

    @model_validator(mode="after")
    def _offset(self) -> "PairIndex":
        if not 0 <= self.s < self.base:
            raise SpecError(f"Смещение s={self.s} вне 0..{self.base - 1}")
        return self

    @property
    def vertex(self) -> int:
        return self.r * self.base + self.s


class ArcColoring(_Frozen):
    """
    Тотальная раскраска дуг: colors[j] это цвет дуги с индексом j, значения 1..c.
    c может быть больше числа реально использованных цветов (см. used).
    """
    colors: tuple[int, ...]
    c: int

    @model_validator(mode="after")
    def _palette(self) -> "ArcColoring":
        if self.c < 1:
            raise SpecError(f"Число цветов c={self.c} должно быть >= 1")
        bad = [x for x in self.colors if not 1 <= x <= self.c]
        if bad:
            raise SpecError(f"Цвета {sorted(set(bad))} вне 1..{self.c}")
        return self

    @classmethod
    def from_colors(cls, colors) -> "ArcColoring":
        colors = tuple(colors)
        return cls(colors=colors, c=max(colors, default=1))

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, arc: int) -> int:
        return self.colors[arc]


class VerificationReport(_Frozen):
    mode: Mode
    verdict: bool
    failures: list[tuple[int, int]] = Field(default_factory=list)
    # ключ "u->v", значение: последовательность вершин
    witnesses: Optional[dict[str, tuple[int, ...]]] = None
    pairs_checked: int = 0

    @model_validator(mode="after")
    def _verdict(self) -> "VerificationReport":
        if self.verdict != (not self.failures):
            raise SpecError("verdict должен совпадать с отсутствием провалившихся пар")
        return self

    def witness(self, u: int, v: int) -> tuple[int, ...] | None:
        if not self.witnesses:
            return None
        return self.witnesses.get(f"{u}->{v}")


class PredictedValue(_Frozen):
    family: Family
    params: dict[str, int | list[int] | str] = Field(default_factory=dict)
    theorem: str = ""
    rc: Optional[int] = None
    src: Optional[int] = None
    applicable: bool = True
    reason: str = ""

    @model_validator(mode="after")
    def _chain(self) -> "PredictedValue":
        if not self.applicable:
            return self
        if self.rc is None or self.rc < 1:
            raise SpecError("Применимый прогноз обязан содержать rc >= 1")
        if self.src is not None and self.src < self.rc:
            raise SpecError(f"rc={self.rc} > src={self.src}")
        return self


class TailPartitionColoring(_Frozen):
    """
    Раскраска по классу хвоста: дуга получает класс своей вершины-хвоста,
    кроме дуг из exceptions (индекс дуги -> класс).
    Классы нумеруются подряд начиная с origin; цвет = класс - origin + 1.
    """
    partition: tuple[int, ...]
    origin: int = 0
    exceptions: dict[int, int] = Field(default_factory=dict)

    def to_coloring(self, arcs, c: int | None = None) -> ArcColoring:
        classes = [self.exceptions.get(j, self.partition[tail]) for j, (tail, _) in enumerate(arcs)]
        if any(cls_ < self.origin for cls_ in classes):
            raise SpecError(f"Класс меньше начала нумерации {self.origin}")
        colors = tuple(cls_ - self.origin + 1 for cls_ in classes)
        return ArcColoring(colors=colors, c=c if c is not None else max(colors, default=1))


class SolveLimits(_Frozen):
    max_colors: PositiveInt = MAX_COLORS_DEFAULT
    node_budget: PositiveInt = BUDGET_DEFAULT
    find_certificate: bool = True


class SolveStats(_Frozen):
    nodes: int = 0
    colorings_tested: int = 0
    levels: list[int] = Field(default_factory=list)   # перебранные значения c


class SolveResult(_Frozen):
    target: Target
    status: SolveStatus
    value: Optional[int] = None
    lower: int
    upper: int
    stats: SolveStats = Field(default_factory=SolveStats)
    certificate: Optional[ArcColoring] = None

    @model_validator(mode="after")
    def _bounds(self) -> "SolveResult":
        if self.lower > self.upper:
            raise SpecError(f"lower={self.lower} > upper={self.upper}")
        if self.status == SolveStatus.EXACT:
            if self.value is None or not self.lower <= self.value <= self.upper:
                raise SpecError("Точный результат должен лежать в [lower, upper]")
        return self
