"""β and β′ have the same rank."""

from .. import catalog as cat
from ..galois import NotGalois, check_galois, check_lemma31
from ..report import CheckReport

DEFAULT = "regular:sweedler:H4"
INSTANCES = cat.MODULE_COALGEBRA_NAMES


def run(instance: str, fld) -> CheckReport:
    mc = cat.module_coalgebra(instance, fld)
    rep = CheckReport(f"canonical maps of {mc.name}")
    rep.extend(check_lemma31(mc))
    cert = check_galois(mc)
    status = cert.describe() if isinstance(cert, NotGalois) else "Galois"
    rep.record("Galois status determined", True, status)
    return rep
