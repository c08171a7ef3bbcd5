import os
from dotenv import load_dotenv
load_dotenv()


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, "") or default)
    except ValueError:
        return default


BUDGET_DEFAULT = _int_env("RCDC_BUDGET_DEFAULT", 2_000_000)
MAX_COLORS_DEFAULT = _int_env("RCDC_MAX_COLORS_DEFAULT", 12)
REPORT_SOLVE_ARCS = _int_env("RCDC_REPORT_SOLVE_ARCS", 12)
LOG_LEVEL = os.getenv("RCDC_LOG_LEVEL", "WARNING").upper()
LOG_DIR = os.getenv("RCDC_LOG_DIR", "")

# битовая маска цветов в поиске радужных путей
MAX_COLOR_CAPACITY = 64
