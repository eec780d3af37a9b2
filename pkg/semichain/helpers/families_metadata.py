"""
The family mini-grammar accepted by `parse_family`, for help texts.
"""

families_metadata = {
    "T:n": {"description": "full transformation monoid T_n", "order": "n^n"},
    "O:n": {"description": "order-preserving maps O_n", "order": "C(2n-1, n-1)"},
    "I:n": {"description": "symmetric inverse monoid I_n", "order": "sum_i C(n,i)^2 i!"},
    "POI:n": {"description": "order-preserving partial injections", "order": "C(2n, n)"},
    "POPI:n": {
        "description": "orientation-preserving partial injections",
        "order": "1 + (n/2) C(2n, n)",
    },
    "brandt:<g>,n": {
        "description": "Brandt semigroup B(G, n) over g in triv, c<k>, s<k>",
        "order": "n^2 |G| + 1",
    },
    "null:m": {"description": "null semigroup, element 0 is the zero", "order": "m"},
    "mono:m,r": {
        "description": "monogenic semigroup of index m and period r",
        "order": "m + r - 1",
    },
    "cyc:n": {"description": "cyclic group C_n", "order": "n"},
    "sym:n": {"description": "symmetric group S_n", "order": "n!"},
    "fb2": {"description": "free band on two generators", "order": "6"},
}


def family_help() -> str:
    """One line per accepted form."""
    width = max(len(form) for form in families_metadata)
    return "\n".join(
        f"  {form.ljust(width)}  {entry['description']} (order {entry['order']})"
        for form, entry in families_metadata.items()
    )
