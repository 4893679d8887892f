from app.models.hstar import HStarVector
from app.models.poset import IdealLattice, LinearExtension, Poset
from app.models.polynomial import RatPolynomial

__all__ = ["HStarVector", "IdealLattice", "LinearExtension", "Poset", "RatPolynomial"]
