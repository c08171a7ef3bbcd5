DESCRIPTION = (
    "Радужная (rc*) и сильная радужная (src*) связность орграфов: генерация, "
    "раскраски из теорем, проверка, точный перебор и таблицы."
)

GRAPH_SUMMARY = "n={n} m={m} strong={strong}"
GRAPH_WRITTEN = "Орграф записан в {path}: n={n}, m={m}, сильно связен: {strong}"
COLORING_WRITTEN = "Раскраска записана в {path}: {c} цветов (прогноз: {predicted})"
COLORING_SUMMARY = "Цветов: {c} (прогноз: {predicted})"

VERIFY_OK = "✅ Раскраска {mode}: все {pairs} пар соединены"
VERIFY_FAIL = "❌ Раскраска {mode}: не соединены {count} пар из {pairs}"
VERIFY_FAIL_PAIR = "  {u} -> {v}"

PREDICT_OK = "{family} {params}: rc*={rc}, src*={src}\n  {theorem}"
PREDICT_NA = "{family} {params}: теорема неприменима ({reason})"

DISTANCE_ROW = "i={i}: формула {formula}, BFS {bfs}"
DISTANCE_DIAMETER = "diam: формула {formula}, BFS {bfs}"
DISTANCE_MISMATCH = "❌ Формула и BFS расходятся"

REPORT_WRITTEN = "Таблица ({rows} строк) записана в {path}"
REPORT_DISAGREE = "❌ Строк с расхождением: {count}"

HYPOTHESIS_FAILED = "Условия теоремы не выполнены: {error}\nНужно: {precondition}"
REFUSED = "Отказ: {error}"
INPUT_ERROR = "Ошибка входных данных: {error}"
BUDGET_EXCEEDED = "Значение не найдено в пределах лимитов: {lower} <= значение <= {upper}"

FIGURE1_NOTE = (
    "Раскраска H использует 7 цветов: 6 цветов для H недостаточно, "
    "поэтому пример немонотонности воспроизводится в варианте 7 -> 7."
)
