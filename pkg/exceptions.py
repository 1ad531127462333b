# exceptions.py

from typing import Any, Dict, List, Optional


class SurgeryError(Exception):
    """Eroarea de bază a aplicației: un cod scurt și un mesaj detaliat (ca status/detail)."""
    def __init__(self, code: str, detail: str):
        super().__init__(f"[{code}] {detail}")
        self.code = code
        self.detail = detail


class AngleError(SurgeryError):
    """Unghi invalid (numitor zero, text care nu e de forma 'p/q')."""
    def __init__(self, detail: str):
        super().__init__("angle", detail)


class LaminationError(SurgeryError):
    pass


class ConfigValidationError(SurgeryError):
    """O verificare combinatorie a configurației a eșuat; `angles` numește unghiurile vinovate."""
    def __init__(self, code: str, detail: str, angles: Optional[List[str]] = None):
        super().__init__(code, detail)
        self.angles = angles or []


class NoCycleError(SurgeryError):
    """Algoritmul cifrelor nu a găsit un ciclu sub plafonul configurat."""
    def __init__(self, angle: str, cap: int):
        super().__init__("no_cycle", f"Niciun ciclu pentru {angle} în {cap} stări.")
        self.angle = angle
        self.cap = cap


class SolverError(SurgeryError):
    """Metoda Newton nu a converit sau a găsit rădăcina greșită."""
    def __init__(self, code: str, detail: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(code, detail)
        self.diagnostics = diagnostics or {}


class ReportError(SurgeryError):
    """Probleme de I/O sau de format la citirea/scrierea fișierelor."""
    def __init__(self, detail: str):
        super().__init__("io", detail)
