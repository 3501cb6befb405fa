"""Integer sign exponents for every identity family in the workbench.

Each function returns the exponent e so the term carries (-1)^e.  They are
deterministic and side-effect free; only parities matter but full integers
are returned so tests can compare formulas exactly.

Index conventions: compositions are passed as tuples of positive parts,
positions inside formulas are 1-based (matching the usual mathematical
displays), degree lists are plain ints.
"""

from __future__ import annotations

from .kernel import Perm


def stasheff_term_exp(i, j, k):
    """Exponent of m_{i+1+k} o (id^i ox m_j ox id^k) in the Stasheff sum."""
    return i + j * k


def rb_product_side_exp(parts):
    """Exponent on m_k o (T_{l_1} ox ... ox T_{l_k}); parts = (l_1..l_k)."""
    k = len(parts)
    return k * (k - 1) // 2 + sum((k - j) * l for j, l in enumerate(parts, start=1))


def rb_operator_side_exp(i, k, parts, bare):
    """Exponent on T_{r_1} o (id^i ox m_p o (T_{r_2}..id..T_{r_p}) ox id^k).

    parts = (r_1, ..., r_p); bare is the 1-based slot (1 <= bare <= p) of
    the identity input among m_p's arguments; i + 1 + k = r_1.
    """
    p = len(parts)
    e = i + (p + sum(r - 1 for r in parts[1:])) * k
    e += sum(r - 1 for r in parts[1:bare])
    e += sum((parts[t - 1] - 1) * (p - t) for t in range(2, p + 1))
    return e


def dual_module_exp(degs_a, deg_f, deg_x, degs_b, operator):
    """Exponent in the dual-module structure maps on M^vee.

    With i = len(degs_a), j = len(degs_b): the multiplication maps use
    |f|(i+j-1) (operator=False), the Rota-Baxter maps |f|(i+j)
    (operator=True).
    """
    i, j = len(degs_a), len(degs_b)
    e = (j + 1) * (i + j + 1)
    e += sum(degs_a) * (deg_f + deg_x + sum(degs_b))
    e += deg_f * (i + j if operator else i + j - 1)
    return e


def dual_module_pairing_exp(degs_a, degs_b, deg_f):
    """The theta exponent relating the dual-module identity to the module
    identity under the evaluation pairing."""
    m, n = len(degs_a), len(degs_b)
    return (sum(degs_a) * sum(degs_b)
            + deg_f * (sum(degs_a) + m + n + 1)
            + (m + n + 1) * (n + 1))


def completion_exp(j, n, deg_f, degs_a):
    """The xi exponent of the j-th summand of the cyclic completion.

    degs_a are the degrees of all n inputs in order; slot j (1-based)
    holds the dual element of degree deg_f.
    """
    before = sum(degs_a[: j - 1])
    after = sum(degs_a[j:])
    return j * n + (n - 1) * deg_f + before * (deg_f + after)


def precy_interleave_exp(degs_b, degs_f):
    """gamma = sum (n-k+1)|b_k| + sum (n-k)|f_k| on the first n pairs."""
    n = len(degs_f)
    e = sum((n - k + 1) * d for k, d in enumerate(degs_b[:n], start=1))
    e += sum((n - k) * d for k, d in enumerate(degs_f[:n], start=1))
    return e


def extraction_exp(degs_a, degs_f):
    """The exponent s in the bracket-extraction formula of the
    pre-Calabi-Yau <-> double-Poisson bijection."""
    n = len(degs_a)
    a, f = degs_a, degs_f
    e = a[n - 1] * f[0] + (n + 1) * (a[n - 1] + f[0])
    e += sum((n - j) * a[j - 1] for j in range(1, n + 1))
    e += sum((j - 1) * f[j - 1] for j in range(1, n + 1))
    e += sum(a[i - 1] * a[j - 1] for i in range(1, n) for j in range(i + 1, n))
    e += sum(f[i - 1] * f[j - 1] for i in range(2, n + 1) for j in range(i + 1, n + 1))
    e += sum(f[i - 1] * a[j - 1] for i in range(2, n) for j in range(i, n))
    return e


def doubled_perm(sigma):
    """sigma-tilde in S_{2n}: pairs (2i-1, 2i) move together as blocks.

    0-based: positions (2i, 2i+1) are sent to (2 sigma(i), 2 sigma(i)+1).
    """
    n = sigma.size
    images = [0] * (2 * n)
    for i in range(n):
        images[2 * i] = 2 * sigma(i)
        images[2 * i + 1] = 2 * sigma(i) + 1
    return Perm(images)


def sym_extraction_exp(word_degs, picks):
    """Koszul exponent for pulling one chosen letter out of each word to
    the front, plus the global n(n-1)/2 twist of the symmetric-algebra
    bracket operations.

    word_degs: per word, the list of letter degrees; picks: per word, the
    0-based index of the chosen letter.
    """
    n = len(word_degs)
    e = n * (n - 1) // 2
    for s in range(n):
        chosen = word_degs[s][picks[s]]
        passed = sum(sum(d for t, d in enumerate(word_degs[r]) if t != picks[r])
                     for r in range(s))
        passed += sum(word_degs[s][: picks[s]])
        e += passed * chosen
    return e


# Exponents gamma_1..gamma_6 appearing in the graded bookkeeping of the
# induced A-infinity structure on B + s^-1 B^vee.  Arguments mirror the
# displays: degs_b/degs_f are the degrees of b_1.. and f_1.. in order.

def precy_case_exp_1(p, j, degs_b, degs_f):
    e = p + sum(degs_b[:p]) + sum(degs_f[:p])
    e += sum((p + j - k + 1) * degs_b[k - 1] for k in range(p + 1, p + j + 1))
    e += sum((p + j - k) * degs_f[k - 1] for k in range(p + 1, p + j + 1))
    return e


def precy_case_exp_2(p, j, degs_b, degs_f):
    e = p + sum(degs_b[: p + 1]) + sum(degs_f[: p + 1])
    e += sum((p + j - k + 1) * degs_b[k - 1] for k in range(p + 2, p + j + 2))
    e += sum((p + j - k) * degs_f[k - 1] for k in range(p + 1, p + j + 1))
    return e


def precy_case_exp_3(i, n, degs_b, degs_f):
    e = i + sum(degs_b[:i]) + sum(degs_f[:i])
    e += sum((n - k + 1) * degs_b[k - 1] for k in range(i + 1, n + 1))
    e += sum((n - k) * degs_f[k - 1] for k in range(i + 1, n + 1))
    return e


def precy_case_exp_4(p, i, j, n, degs_b, degs_f):
    e = p + (j - 1) * (i - p) + (j - 1) * (sum(degs_b[:p]) + sum(degs_f[:p]))
    e += sum((n - k + 1) * degs_b[k - 1] for k in range(1, p + j + 1))
    e += sum((n - k) * degs_f[k - 1] for k in range(1, p + j + 1))
    return e


def precy_case_exp_5(s, i, j, n, degs_b, degs_f):
    e = s + (j - 1) * (i - s - 1) + (j - 1) * (sum(degs_b[:s]) + sum(degs_f[:s]))
    e += sum((n - k + 1) * degs_b[k - 1] for k in range(1, s + j + 1))
    e += sum((n - k) * degs_f[k - 1] for k in range(1, s + j + 1))
    return e


def precy_case_exp_6(i, j, n, degs_b, degs_f):
    e = i + 1 + (j - 1) * (sum(degs_b[:i]) + sum(degs_f[:i]))
    e += sum((n - k + 1) * degs_b[k - 1] for k in range(i + 1, n + 1))
    e += sum((n - k) * degs_f[k - 1] for k in range(i + 1, n + 1))
    return e
