import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Базовые настройки
BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = os.getenv("SECRET_KEY", "rcfw-local-secret-key")
DEBUG = os.getenv("DEBUG", "false").lower() == "true"
ALLOWED_HOSTS = os.getenv("ALLOWED_HOSTS", "localhost").split(",")

# Приложения
INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "polycore",
    "semialgebraic",
    "formulas",
    "cad",
    "topology",
    "collapses",
    "workbench",
]

# База данных не используется
DATABASES = {}

# Локализация
LANGUAGE_CODE = "ru-ru"
TIME_ZONE = "Europe/Moscow"
USE_I18N = True
USE_TZ = True

# Жёсткие ограничения, которые нельзя превысить ни через .env, ни через CLI
RCFW_HARD_LIMITS = {
    "threads": 64,
    "max_variables": 3,
    "max_degree": 16,
    "search_budget": 10_000_000,
    "falsify_samples": 100_000,
}


def _limited_int(env_name: str, default: int, limit_key: str) -> int:
    """Читает целое из окружения и обрезает его жёстким лимитом."""
    value = int(os.getenv(env_name, default))
    return max(1, min(value, RCFW_HARD_LIMITS[limit_key]))


# Настройки вычислительного ядра
RCFW_THREADS = _limited_int("RCFW_THREADS", 1, "threads")
RCFW_MAX_VARIABLES = _limited_int("RCFW_MAX_VARIABLES", 3, "max_variables")
RCFW_MAX_DEGREE = _limited_int("RCFW_MAX_DEGREE", 8, "max_degree")
RCFW_SEARCH_BUDGET = _limited_int("RCFW_SEARCH_BUDGET", 100_000, "search_budget")
RCFW_FALSIFY_SAMPLES = _limited_int("RCFW_FALSIFY_SAMPLES", 200, "falsify_samples")
RCFW_LOG_LEVEL = os.getenv("RCFW_LOG_LEVEL", "WARNING").upper()

# Каталог с примерами множеств и комплексов
RCFW_CORPUS_DIR = BASE_DIR / "workbench" / "corpus"

# Настройки для логирования
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        # Только stderr
        "console": {
            "class": "logging.StreamHandler",
        },
    },
    # Базовый логгер по умолчанию
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": RCFW_LOG_LEVEL,
            "propagate": False,
        }
        for app in (
            "polycore",
            "semialgebraic",
            "formulas",
            "cad",
            "topology",
            "collapses",
            "workbench",
        )
    },
}

# Глобальные настройки DRF.
REST_FRAMEWORK = {
    # Сериализаторы используются только для --json вывода, HTTP-слоя нет
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "UNAUTHENTICATED_USER": None,
}
