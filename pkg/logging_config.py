# logging_config.py
from __future__ import annotations

import logging
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path

from config import LOG_DIR, LOG_LEVEL


def setup_logging(level: str | int | None = None) -> None:
    """
    Общая настройка логирования:
      - вывод в stderr (stdout занят JSON/CSV);
      - если задан RCDC_LOG_DIR: файл rcdc.log (INFO+) и errors.log (ERROR+),
        оба ротируются раз в сутки.
    """
    # Формат логов
    fmt = logging.Formatter(
        "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    root = logging.getLogger()
    root.setLevel(level if level is not None else LOG_LEVEL)

    # Чтобы не плодить хендлеры при повторных вызовах
    if getattr(root, "_logging_already_configured", False):
        return

    # --- консоль ---
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(fmt)
    root.addHandler(console)

    if LOG_DIR:
        log_dir = Path(LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)

        # --- файл со всеми уровнями (INFO+) ---
        all_file = TimedRotatingFileHandler(
            filename=log_dir / "rcdc.log",
            when="midnight",
            interval=1,
            backupCount=14,
            encoding="utf-8",
        )
        all_file.setFormatter(fmt)
        all_file.setLevel(logging.INFO)
        root.addHandler(all_file)

        # --- файл только с ошибками (ERROR+) ---
        err_file = TimedRotatingFileHandler(
            filename=log_dir / "errors.log",
            when="midnight",
            interval=1,
            backupCount=30,
            encoding="utf-8",
        )
        err_file.setFormatter(fmt)
        err_file.setLevel(logging.ERROR)
        root.addHandler(err_file)

    # пометили, что уже настроили
    root._logging_already_configured = True
