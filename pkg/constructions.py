# constructions.py
from __future__ import annotations

import logging
import math
from typing import Sequence

from digraph import (
    Digraph,
    biorient,
    circulant,
    complete_biorientation,
    count_asymmetric_arcs,
    cycle_edges,
    directed_cycle,
    figure1_digraph,
    is_strongly_connected,
    multipartite_edges,
    normalize_circulant_pair,
    part_index,
    path_edges,
    spanning_subcycle,
    star_edges,
)
from errors import HypothesisError, InapplicableError, RefusalError, SpecError
from models import (
    ArcColoring,
    CirculantSpec,
    Family,
    PairIndex,
    PredictedValue,
    TailPartitionColoring,
    Variant,
)
from rainbow import is_strong_rainbow_connected, lift_edge_coloring

logger = logging.getLogger(__name__)

Built = tuple[Digraph, ArcColoring]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def pair_index(i: int, base: int) -> PairIndex:
    """v_i -> <floor(i/base), re(i, base)>."""
    if i < 0:
        raise SpecError(f"Индекс вершины {i} отрицателен")
    return PairIndex(r=i // base, s=i % base, base=base)


# ===== Условия теорем (тексты показывает CLI) =====

PRECONDITIONS: dict[Family, str] = {
    Family.INTERVAL: "1 <= k <= n-2",
    Family.C2K: "k >= 2, n = 2k",
    Family.SQUARE: "k >= 3, n = (k-1)^2",
    Family.MULTIPLE: "n = a*k, a >= k-1 >= 2",
    Family.COROLLARY: "k >= 2, n = 2k+1",
    Family.PATH: "n >= 2",
    Family.CYCLE: "n >= 4",
    Family.STAR: "n >= 2 листьев",
    Family.MULTIPARTITE: "не меньше двух долей, хотя бы одна доля размера >= 2",
    Family.SUBCYCLE: "сильно связный остовный подорграф bior C_n, n >= 3, k >= 1 асимметричных дуг",
    Family.DIRCYCLE: "m >= 3",
    Family.COMPLETE: "n >= 2",
    Family.CIRCULANT: "C_n(S), распознаваемый как одно из семейств после нормализации",
}


def _require(ok: bool, family: Family, message: str) -> None:
    if not ok:
        raise HypothesisError(f"{message} (нужно: {PRECONDITIONS[family]})", PRECONDITIONS[family])


# ===== Прогноз значений =====

def _inapplicable(family: Family, params: dict, reason: str) -> PredictedValue:
    return PredictedValue(family=family, params=params, applicable=False, reason=reason)


def _exact(family: Family, params: dict, value: int, theorem: str) -> PredictedValue:
    return PredictedValue(family=family, params=params, rc=value, src=value, theorem=theorem)


def predict(family: Family | str, **params) -> PredictedValue:
    """
    Значения rc*/src*, которые даёт соответствующая теорема.
    Если условия не выполнены, то applicable=False и причина; это данные, не ошибка.
    """
    family = Family(family)
    clean = {k: v for k, v in params.items() if v is not None}
    try:
        return _PREDICTORS[family](clean)
    except (KeyError, TypeError) as e:
        return _inapplicable(family, clean, f"не хватает параметров: {e}")
    except ValueError as e:
        return _inapplicable(family, clean, f"недопустимые параметры: {e}")


def _predict_interval(p: dict) -> PredictedValue:
    n, k = p["n"], p["k"]
    if not 1 <= k <= n - 2:
        return _inapplicable(Family.INTERVAL, p, f"нужно {PRECONDITIONS[Family.INTERVAL]}")
    return _exact(Family.INTERVAL, p, _ceil_div(n, k), "rc*=src*=ceil(n/k) для C_n([k])")


def _predict_c2k(p: dict) -> PredictedValue:
    k = p["k"]
    p = {**p, "variant": str(Variant(p.get("variant", Variant.K)))}
    if k < 2:
        return _inapplicable(Family.C2K, p, f"нужно {PRECONDITIONS[Family.C2K]}")
    return _exact(Family.C2K, p, k, "rc*=src*=k для C_2k({1,k}) и C_2k({1,k+1})")


def _predict_square(p: dict) -> PredictedValue:
    k = p["k"]
    if k < 3:
        return _inapplicable(Family.SQUARE, p, f"нужно {PRECONDITIONS[Family.SQUARE]}")
    return _exact(Family.SQUARE, p, 2 * k - 4, "rc*=src*=2k-4 для C_(k-1)^2({1,k})")


def _predict_multiple(p: dict) -> PredictedValue:
    k, a = p["k"], p["a"]
    if not (a >= k - 1 >= 2):
        return _inapplicable(Family.MULTIPLE, p, f"нужно {PRECONDITIONS[Family.MULTIPLE]}")
    return _exact(Family.MULTIPLE, p, a + k - 2, "rc*=src*=a+k-2 для C_ak({1,k})")


def _predict_corollary(p: dict) -> PredictedValue:
    k = p["k"]
    # при k=1 получается C_3({1,2}) = bior K_3, у него rc*=1, а не 2
    if k < 2:
        return _inapplicable(Family.COROLLARY, p, "C_3({1,2}) это полная биориентация, rc*=1")
    base = _predict_interval({"n": 2 * k + 1, "k": 2})
    return _exact(Family.COROLLARY, p, base.rc, "C_2k+1({1,k+1}) ≅ C_2k+1([2]), значение k+1")


def _predict_path(p: dict) -> PredictedValue:
    n = p["n"]
    if n < 2:
        return _inapplicable(Family.PATH, p, f"нужно {PRECONDITIONS[Family.PATH]}")
    return _exact(Family.PATH, p, n - 1, "rc*=src*=n-1 для bior P_n")


def _predict_cycle(p: dict) -> PredictedValue:
    n = p["n"]
    if n < 4:
        return _inapplicable(Family.CYCLE, p, "для n < 4 значение не заявлено, считайте решателем")
    return _exact(Family.CYCLE, p, _ceil_div(n, 2), "rc*=src*=ceil(n/2) для bior C_n")


def _predict_star(p: dict) -> PredictedValue:
    n = p["n"]
    if n < 2:
        return _inapplicable(Family.STAR, p, "K_{1,1} это K_2, см. семейство complete")
    return _exact(Family.STAR, p, 2, "rc*=src*=2 для bior K_{1,n}")


def _predict_multipartite(p: dict) -> PredictedValue:
    parts = list(p["parts"])
    p = {**p, "parts": parts}
    if len(parts) < 2 or max(parts) < 2:
        return _inapplicable(Family.MULTIPARTITE, p, f"нужно: {PRECONDITIONS[Family.MULTIPARTITE]}")
    return _exact(Family.MULTIPARTITE, p, 2, "rc*=src*=2 для полного многодольного орграфа")


def _predict_subcycle(p: dict) -> PredictedValue:
    n, k = p["n"], p["asymmetric"]
    if n < 3 or k < 1:
        return _inapplicable(Family.SUBCYCLE, p, f"нужно: {PRECONDITIONS[Family.SUBCYCLE]}")
    if k <= 2:
        # для k <= 2 заявлено только rc*
        return PredictedValue(family=Family.SUBCYCLE, params=p, rc=n - 1, src=None,
                              theorem="rc*=n-1 при k<=2 асимметричных дугах")
    return _exact(Family.SUBCYCLE, p, n, "rc*=src*=n при k>=3 асимметричных дугах")


def _predict_dircycle(p: dict) -> PredictedValue:
    m = p["m"] if "m" in p else p["n"]
    if m < 3:
        return _inapplicable(Family.DIRCYCLE, p, "ориентированный C_2 это bior K_2, rc*=1")
    return _exact(Family.DIRCYCLE, p, m, "rc*=src*=m ровно для ориентированного цикла C_m")


def _predict_complete(p: dict) -> PredictedValue:
    n = p["n"]
    if n < 2:
        return _inapplicable(Family.COMPLETE, p, f"нужно {PRECONDITIONS[Family.COMPLETE]}")
    return _exact(Family.COMPLETE, p, 1, "rc*=1 <=> src*=1 <=> D = bior K_n")


def _predict_circulant(p: dict) -> PredictedValue:
    """Распознаём C_n(S) как одно из семейств; пара генераторов сначала нормализуется."""
    spec = CirculantSpec(n=p["n"], S=tuple(p["S"]))
    p = {"n": spec.n, "S": list(spec.S)}
    hit = _recognize(spec)
    if hit is None and len(spec.S) == 2:
        try:
            normal = normalize_circulant_pair(spec)
        except InapplicableError as e:
            return _inapplicable(Family.CIRCULANT, p, str(e))
        hit = _recognize(normal)
        if hit is not None:
            hit = hit.model_copy(update={"theorem": f"{spec.label()} ≅ {normal.label()}: {hit.theorem}"})
    if hit is None or not hit.applicable:
        return _inapplicable(Family.CIRCULANT, p, f"{spec.label()} не покрыт ни одной теоремой")
    return hit.model_copy(update={"family": Family.CIRCULANT, "params": p})


def _recognize(spec: CirculantSpec) -> PredictedValue | None:
    n, S = spec.n, spec.S
    if len(S) == 1 and math.gcd(S[0], n) == 1:
        return _predict_dircycle({"m": n}) if n >= 3 else _predict_complete({"n": 2})
    if S == tuple(range(1, len(S) + 1)):
        if len(S) == n - 1:
            return _predict_complete({"n": n})
        if len(S) <= n - 2:
            return _predict_interval({"n": n, "k": len(S)})
    if len(S) == 2 and S[0] == 1:
        k = S[1]
        if n % 2 == 0 and k in (n // 2, n // 2 + 1) and n >= 4:
            half = n // 2
            return _predict_c2k({"k": half, "variant": Variant.K if k == half else Variant.K_PLUS_1})
        if k >= 3 and n == (k - 1) ** 2:
            return _predict_square({"k": k})
        if n % k == 0 and n // k >= k - 1 >= 2:
            return _predict_multiple({"k": k, "a": n // k})
    return None


_PREDICTORS = {
    Family.INTERVAL: _predict_interval,
    Family.C2K: _predict_c2k,
    Family.SQUARE: _predict_square,
    Family.MULTIPLE: _predict_multiple,
    Family.COROLLARY: _predict_corollary,
    Family.CIRCULANT: _predict_circulant,
    Family.PATH: _predict_path,
    Family.CYCLE: _predict_cycle,
    Family.STAR: _predict_star,
    Family.MULTIPARTITE: _predict_multipartite,
    Family.SUBCYCLE: _predict_subcycle,
    Family.DIRCYCLE: _predict_dircycle,
    Family.COMPLETE: _predict_complete,
}


# ===== Циркулянты =====

def color_circulant_interval(n: int, k: int) -> Built:
    """
    C_n([k]): вершины режутся на блоки по k подряд (последний может быть короче),
    каждая дуга красится номером блока своего хвоста. ceil(n/k) цветов.
    """
    _require(1 <= k <= n - 2, Family.INTERVAL, f"k={k}, n={n}")
    D = circulant(n, range(1, k + 1))
    blocks = TailPartitionColoring(partition=tuple(i // k for i in range(n)))
    return D, blocks.to_coloring(D.arcs, c=_ceil_div(n, k))


def color_c2k(k: int, variant: Variant | str = Variant.K) -> Built:
    """C_2k({1,k}) или C_2k({1,k+1}); класс вершины v_i равен i mod k."""
    variant = Variant(variant)
    _require(k >= 2, Family.C2K, f"k={k}")
    second = k if variant == Variant.K else k + 1
    D = circulant(2 * k, (1, second))
    classes = TailPartitionColoring(partition=tuple(i % k for i in range(2 * k)))
    return D, classes.to_coloring(D.arcs, c=k)


def color_square(k: int) -> Built:
    """
    C_(k-1)^2({1,k}), вершина v_i = <r, s> по основанию k-1.

    - k-скачок с хвостом в V_r получает цвет r;
    - 1-скачки <r,0><r,1> и <r,k-2><r+1,0>: цвет r;
    - 1-скачок <r,s><r,s+1> при 1 <= s <= k-3: цвет k-2+s.
    Цвета 0..2k-5 выдаются наружу как 1..2k-4.
    """
    _require(k >= 3, Family.SQUARE, f"k={k}")
    base = k - 1
    n = base * base
    D = circulant(n, (1, k))
    exceptions: dict[int, int] = {}
    for j, (tail, head) in enumerate(D.arcs):
        if (head - tail) % n != 1:
            continue
        at = pair_index(tail, base)
        if at.s == 0 or at.s == k - 2:
            exceptions[j] = at.r
        else:
            exceptions[j] = k - 2 + at.s
    coloring = TailPartitionColoring(partition=tuple(i // base for i in range(n)), exceptions=exceptions)
    return D, coloring.to_coloring(D.arcs, c=2 * k - 4)


def _multiple_one_jump(r: int, s: int, k: int, a: int) -> int:
    if r >= k - 2:
        if s == 0 or s == k - 1:
            return r
        return a - 1 + s
    # r <= k-3
    if s == k - 2 - r:
        return r
    if s == k - 1:
        return a + r
    if s <= k - 3 - r:
        return a + r + s
    return a + s - (k - 1 - r)


def color_multiple(k: int, a: int) -> Built:
    """
    C_ak({1,k}), вершина v_i = <r, s> по основанию k.
    k-скачок <r,s><r+1,s>: цвет r; 1-скачки по правилам для r >= k-2 и r <= k-3
    (см. _multiple_one_jump). Всего a+k-2 цветов.
    """
    _require(a >= k - 1 >= 2, Family.MULTIPLE, f"k={k}, a={a}")
    n = a * k
    D = circulant(n, (1, k))
    exceptions = {
        j: _multiple_one_jump(*_rs(tail, k), k, a)
        for j, (tail, head) in enumerate(D.arcs)
        if (head - tail) % n == 1
    }
    coloring = TailPartitionColoring(partition=tuple(i // k for i in range(n)), exceptions=exceptions)
    return D, coloring.to_coloring(D.arcs, c=a + k - 2)


def _rs(i: int, base: int) -> tuple[int, int]:
    at = pair_index(i, base)
    return at.r, at.s


def color_directed_cycle(m: int) -> Built:
    _require(m >= 2, Family.DIRCYCLE, f"m={m}")
    D = directed_cycle(m)
    return D, ArcColoring.from_colors(range(1, m + 1))


def color_complete(n: int) -> Built:
    _require(n >= 2, Family.COMPLETE, f"n={n}")
    D = complete_biorientation(n)
    return D, ArcColoring(colors=(1,) * D.m, c=1)


# ===== Биориентации =====

def _cycle_edge_colors(n: int) -> list[int]:
    """
    Рёберная раскраска C_n с ceil(n/2) цветами, в которой любые
    floor(n/2) подряд идущих рёбер разноцветны.
    """
    h = n // 2
    if n % 2 == 0:
        return [i % h + 1 for i in range(n)]
    return [i + 1 if i <= h else i - h for i in range(n)]


def color_biorientation(kind: str, n: int | None = None, parts: Sequence[int] | None = None) -> Built:
    """
    kind: path | cycle | star | multipartite.

    path: пара i<->i+1 получает цвет i+1; cycle: обе дуги ребра получают
    цвет ребра из _cycle_edge_colors; star: входящие в центр дуги цвет 1,
    исходящие 2; multipartite: 1, если доля хвоста меньше доли головы, иначе 2.
    """
    if kind == "path":
        _require(n is not None and n >= 2, Family.PATH, f"n={n}")
        edges = path_edges(n)
        return lift_edge_coloring(n, edges, range(1, n))
    if kind == "cycle":
        _require(n is not None and n >= 4, Family.CYCLE, f"n={n}")
        return lift_edge_coloring(n, cycle_edges(n), _cycle_edge_colors(n))
    if kind == "star":
        _require(n is not None and n >= 2, Family.STAR, f"n={n}")
        D = biorient(n + 1, star_edges(n))
        return D, ArcColoring(colors=tuple(1 if head == 0 else 2 for _, head in D.arcs), c=2)
    if kind == "multipartite":
        parts = list(parts or [])
        _require(len(parts) >= 2 and max(parts) >= 2, Family.MULTIPARTITE, f"parts={parts}")
        size, edges = multipartite_edges(parts)
        D = biorient(size, edges)
        part = part_index(parts)
        return D, ArcColoring(colors=tuple(1 if part[t] < part[h] else 2 for t, h in D.arcs), c=2)
    raise SpecError(f"Неизвестный вид биориентации: {kind}")


def color_subcycle(n: int, missing: Sequence[Sequence[int]]) -> Built:
    """
    Остовный подорграф bior C_n без дуг missing.

    k=1: симметричные пары получают цвета 1..n-1 (это раскраска bior P_n),
         асимметричная дуга цвет 1;
    k=2: обе асимметричные дуги цвета 1, симметричные пары цветов 2..n-1;
    k>=3: отказ, теорема даёт rc*=src*=n.
    """
    _require(n >= 3, Family.SUBCYCLE, f"n={n}")
    D = spanning_subcycle(n, missing)
    _require(is_strongly_connected(D), Family.SUBCYCLE, "орграф не сильно связен")
    k = count_asymmetric_arcs(D)
    _require(k >= 1, Family.SUBCYCLE, "нет асимметричных дуг")
    if k >= 3:
        raise RefusalError(
            f"{k} асимметричных дуг: раскраски с n-1 цветами нет, rc*=src*={n}",
            value=n,
            precondition="не больше двух асимметричных дуг",
        )

    next_color = 1 if k == 1 else 2
    pair_color: dict[frozenset[int], int] = {}
    for u, v in cycle_edges(n):
        if D.has_arc(u, v) and D.has_arc(v, u):
            pair_color[frozenset((u, v))] = next_color
            next_color += 1
    colors = tuple(pair_color.get(frozenset(arc), 1) for arc in D.arcs)
    return D, ArcColoring(colors=colors, c=n - 1)


# ===== Пример немонотонности src* (13 вершин) =====

def _figure1_colors(with_extra_arc: bool) -> list[int]:
    # порядок дуг как в figure1_digraph
    colors = [1, 2, 3, 4]            # u_i v_i
    colors += [5, 5, 5]              # v_i a1
    colors += [6, 6, 6]              # a1 u_i
    for j in (1, 2, 3):
        colors += [7, 5, j, j]       # a1 b_j, b_j a1, b_j a2, a2 b_j
    colors += [6, 7]                 # a2 u4, v4 a2
    if with_extra_arc:
        colors.append(7)             # a1 a2
    return colors


def figure1(with_extra_arc: bool = False) -> Built:
    """
    H и D = H + a1a2. Раскраска H сильная радужная с 7 цветами.

    6 цветов для H не хватает. Дуги u_iv_i попарно лежат на единственных
    геодезических, так что их цвета 1..4 различны. Геодезические u_i -> v_k
    и b_j -> v_k загоняют цвета дуг a1u_k и b_ja1 в {5, 6}, причём разные.
    Тогда каждой геодезической u4 -> v_k (k <= 3) нужно
    {цвет v4a2, цвет a2b_j} = {1, 2, 3} без k, а для одной дуги v4a2
    это невозможно сразу при всех k.
    Для D дуга a1a2 получает цвет 7, и раскраска остаётся сильной.
    """
    D = figure1_digraph(with_extra_arc)
    return D, ArcColoring(colors=tuple(_figure1_colors(with_extra_arc)), c=7)


def figure1_extensions() -> dict[int, bool]:
    """Для каждого цвета палитры H: остаётся ли раскраска сильной, если так покрасить a1a2."""
    H, col = figure1(with_extra_arc=False)
    D = figure1_digraph(with_extra_arc=True)
    verdicts: dict[int, bool] = {}
    for color in range(1, col.c + 1):
        extended = ArcColoring(colors=col.colors + (color,), c=col.c)
        verdicts[color] = is_strong_rainbow_connected(D, extended).verdict
        logger.info("a1a2 цвета %d: %s", color, verdicts[color])
    return verdicts


# ===== Формулы расстояний в C_n({1,k}) =====

def _formula_applies(n: int, k: int) -> bool:
    return 2 <= k <= n - 1 and n >= (k - 1) * _ceil_div(n, k)


def circulant_distance_formula(n: int, k: int, i: int) -> int:
    """d(v_0, v_i) = floor(i/k) + re(i, k) при n >= (k-1)*ceil(n/k)."""
    if not _formula_applies(n, k):
        raise InapplicableError(f"Формула не заявлена для n={n}, k={k}: нужно 2<=k<=n-1 и n >= (k-1)*ceil(n/k)")
    if not 0 <= i < n:
        raise SpecError(f"Вершина {i} вне 0..{n - 1}")
    return i // k + i % k


def circulant_diameter_formula(n: int, k: int) -> int:
    """diam(C_n({1,k})) = floor((n-1)/k) + max(re(n-1, k), k-2)."""
    if not _formula_applies(n, k):
        raise InapplicableError(f"Формула не заявлена для n={n}, k={k}: нужно 2<=k<=n-1 и n >= (k-1)*ceil(n/k)")
    return (n - 1) // k + max((n - 1) % k, k - 2)


def formula_applies(n: int, k: int) -> bool:
    return _formula_applies(n, k)
