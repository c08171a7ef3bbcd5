from . import color, distance, gen, predict, report, solve, verify

# порядок подкоманд в --help
VERBS = (gen, color, verify, solve, predict, distance, report)

__all__ = ["VERBS"]
