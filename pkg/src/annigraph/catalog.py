"""Named finite rings: small local rings and the local rings with 7 or 8 element maximal ideals."""

from __future__ import annotations

from dataclasses import dataclass

# Local rings (non-fields) whose annihilator graph is planar.
PLANAR_LOCAL = (
    "Z4",
    "Z2[x]/(x^2)",
    "Z9",
    "Z3[x]/(x^2)",
    "Z8",
    "Z2[x]/(x^3)",
    "Z4[x]/(x^2 - 2, 2*x)",
    "Z2[x,y]/(x^2, x*y, y^2)",
    "Z4[x]/(x^2, 2*x)",
    "Z2[a,x]/(a^2 + a + 1, x^2)",  # F4[x]/(x^2)
    "Z4[x]/(x^2 + x + 1)",
    "Z25",
    "Z5[x]/(x^2)",
)

# The remaining planar rings are products.
PLANAR_PRODUCTS = (
    "Z2 x Z4",
    "Z2 x Z2[x]/(x^2)",
    "Z2 x Z2 x Z2",
)


@dataclass(frozen=True)
class CatalogEntry:
    """One presentation from the list of local rings with |m| in {7, 8}.

    ``printed`` is the presentation as it circulates in the literature;
    ``expr`` is the presentation actually built.  They differ only for the
    three printed forms that do not define a local ring with |m| in {7, 8};
    ``note`` says why, and the replacement is the isomorphism class the
    printed list is otherwise missing.
    """

    printed: str
    expr: str
    note: str = ""

    @property
    def corrected(self) -> bool:
        return self.printed != self.expr


LOCAL_M78 = (
    CatalogEntry("Z49", "Z49"),
    CatalogEntry("Z7[x]/(x^2)", "Z7[x]/(x^2)"),
    CatalogEntry("Z16", "Z16"),
    CatalogEntry("Z2[x]/(x^4)", "Z2[x]/(x^4)"),
    CatalogEntry("Z4[x]/(x^2+2)", "Z4[x]/(x^2+2)"),
    CatalogEntry(
        "Z4[x]/(x^2+3x)",
        "Z4[x]/(x^2+2x+2)",
        "printed form is not local: x(x+3) splits it as Z4 x Z4",
    ),
    CatalogEntry("Z4[x]/(x^3-2,2x^2,2x)", "Z4[x]/(x^3-2,2x^2,2x)"),
    CatalogEntry("Z2[x,y]/(x^3,xy,y^2)", "Z2[x,y]/(x^3,xy,y^2)"),
    CatalogEntry("Z8[x]/(2x,x^2)", "Z8[x]/(2x,x^2)"),
    CatalogEntry("Z4[x]/(x^3,2x^2,2x)", "Z4[x]/(x^3,2x^2,2x)"),
    CatalogEntry("Z4[x]/(x^2+2x)", "Z4[x]/(x^2+2x)"),
    CatalogEntry("Z8[x]/(2x,x^2+4)", "Z8[x]/(2x,x^2+4)"),
    CatalogEntry("Z2[x,y]/(x^2,y^2-xy)", "Z2[x,y]/(x^2,y^2-xy)"),
    CatalogEntry("Z4[x,y]/(x^2,y^2-xy,xy-2,2x,2y)", "Z4[x,y]/(x^2,y^2-xy,xy-2,2x,2y)"),
    CatalogEntry(
        "Z4[x,y]/(x^3,y^2,xy-2,2x,2y)",
        "Z4[x,y]/(x^2,y^2,xy-2,2x,2y)",
        "printed form has order 32 and |m| = 16",
    ),
    CatalogEntry("Z2[x,y]/(x^2,y^2)", "Z2[x,y]/(x^2,y^2)"),
    CatalogEntry("Z4[x]/(x^2)", "Z4[x]/(x^2)"),
    CatalogEntry(
        "Z4[x]/(x^3-x^2-2,2x^2,2x)",
        "Z4[x,y]/(x^2-2,xy,y^2,2x,2y)",
        "printed form is not local: x^2 + 2 is a nontrivial idempotent",
    ),
    CatalogEntry("Z2[x,y,z]/(x^2,y^2,z^2,xy,xz,yz)", "Z2[x,y,z]/(x^2,y^2,z^2,xy,xz,yz)"),
    CatalogEntry("Z2[a,x]/(a^3+a+1,x^2)", "Z2[a,x]/(a^3+a+1,x^2)"),  # F8[x]/(x^2)
    CatalogEntry("Z4[x,y]/(x^2,y^2,xy,2x,2y)", "Z4[x,y]/(x^2,y^2,xy,2x,2y)"),
    CatalogEntry("Z4[x]/(x^3+x+1)", "Z4[x]/(x^3+x+1)"),
)
