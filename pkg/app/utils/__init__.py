from .time_formatter import time_formatter
