"""命令行运行的日志配置。

日志只写 stderr 与可选日志文件；stdout 与输出目录留给 CSV/SVG 等数据文件。
求解在进程池中进行，日志行带进程名以区分子树与网格节点任务。
"""

from __future__ import annotations

import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = "%(asctime)s | %(levelname)-7s | %(processName)s | %(name)s | %(message)s"
DATE_FORMAT = "%H:%M:%S"

# 第三方库在 DEBUG 下输出大量字体与绘图细节
QUIET_LOGGERS = ("matplotlib", "PIL")


def setup_logging(level: str = "INFO", log_file: Optional[str] = None, verbose: bool = False) -> logging.Logger:
    """初始化根 logger 并返回。

    Args:
        level: 日志级别字符串，如 "DEBUG" / "INFO"；未知级别按 INFO
        log_file: 可选的日志文件路径（按 10MB 轮转，保留 3 份）
        verbose: 为 True 时强制 DEBUG（对应 --verbose）
    """
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(
            RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=3, encoding="utf-8")
        )

    root = logging.getLogger()
    for old in list(root.handlers):
        root.removeHandler(old)
        if isinstance(old, RotatingFileHandler):
            old.close()
    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)

    resolved = logging.DEBUG if verbose else logging.getLevelName(level.upper())
    root.setLevel(resolved if isinstance(resolved, int) else logging.INFO)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)
    return root
