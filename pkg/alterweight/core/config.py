from pydantic_settings import BaseSettings
from typing import Optional
import os
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    # Límites de grado para polinomios
    ALTERWEIGHT_MAX_DEGREE: int = int(os.getenv("ALTERWEIGHT_MAX_DEGREE", "512"))

    # Presupuesto del procedimiento de nulidad (zeroness)
    ALTERWEIGHT_ZERONESS_MAX_STEPS: int = int(os.getenv("ALTERWEIGHT_ZERONESS_MAX_STEPS", "64"))
    ALTERWEIGHT_ZERONESS_MAX_DEGREE: int = int(os.getenv("ALTERWEIGHT_ZERONESS_MAX_DEGREE", "64"))

    # Enumeración de preimágenes de homomorfismos
    ALTERWEIGHT_PREIMAGE_MAX_NODES: int = int(os.getenv("ALTERWEIGHT_PREIMAGE_MAX_NODES", "64"))
    ALTERWEIGHT_PREIMAGE_MAX_RESULTS: int = int(os.getenv("ALTERWEIGHT_PREIMAGE_MAX_RESULTS", "200000"))

    # Oráculo de fuerza bruta
    ALTERWEIGHT_ORACLE_WORKERS: int = int(os.getenv("ALTERWEIGHT_ORACLE_WORKERS", "4"))

    # Orden monomial por defecto para Gröbner ("grlex" o "lex")
    ALTERWEIGHT_MONOMIAL_ORDER: str = os.getenv("ALTERWEIGHT_MONOMIAL_ORDER", "grlex")

    # Configuración de logs
    ALTERWEIGHT_LOG_LEVEL: str = os.getenv("ALTERWEIGHT_LOG_LEVEL", "INFO")
    ALTERWEIGHT_LOG_FILE: Optional[str] = os.getenv("ALTERWEIGHT_LOG_FILE")


    class Config:
        case_sensitive = True

settings = Settings()
