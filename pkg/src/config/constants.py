"""
Configuration constants for the braided algebra verification engine.
"""

# --- Scalar field ---
SCALAR_SYMBOLS = ("q", "u", "v", "w", "t", "h")  # generator order of the rational-function field

# --- Braidings ---
BRAIDING_FAMILIES = ("flip", "superflip", "dj")
DEFAULT_FAMILY = "dj"
DEFAULT_N = 2
DEFAULT_BAXTER_A = 1  # constant a in the rational current R-matrix R - a/(u-v) I
RANK_FIT_CONFIRMATIONS = 2  # extra rank terms a bi-rank fit must reproduce
DEFAULT_RANK_TERMS = 6  # kMax used when the CLI asks for a bi-rank

# --- Algebra budgets ---
DEFAULT_IDEAL_DEGREE = 4  # largest word weight an ideal-membership solve may reach
RANDOM_PRODUCT_SAMPLES = 100  # word*relation*word products tried by the engine self-check
RANDOM_SEED = 20181203
SELF_CHECK_DEGREE = 3  # words up to this weight in the self-checks and dimension counts

# --- Yangians and the q=1 limit ---
DEFAULT_LEVEL_CUTOFF = 2  # highest level D of a truncated current algebra
DEFAULT_H_ORDER = 2  # h-adic truncation used by the limit checks
DEFAULT_SITES = "1,2"  # evaluation points u_1..u_K

# --- Output ---
REPORT_FIELDS = ("check", "params", "status", "witness", "elapsedMillis")
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED = "skipped"

# --- Suites ---
# Each entry is (check name, parameters); parameters use CLI names.
QUICK_SUITE = [
    ("braiding", {"family": "flip", "n": 2}),
    ("braiding", {"family": "flip", "n": 3}),
    ("braiding", {"family": "superflip", "n": 2}),
    ("braiding", {"family": "dj", "n": 2}),
    ("braiding", {"family": "dj", "n": 3}),
    ("trace-identities", {"family": "flip", "n": 2}),
    ("trace-identities", {"family": "superflip", "n": 2}),
    ("trace-identities", {"family": "dj", "n": 2}),
    ("trace-identities", {"family": "dj", "n": 3}),
    ("current-ybe", {"family": "flip", "n": 2}),
    ("current-ybe", {"family": "dj", "n": 2}),
    ("skew-trace-reduction", {"n": 2, "k": 0}),
    ("skew-trace-reduction", {"n": 2, "k": 1}),
    ("skew-trace-reduction", {"n": 3, "k": 2}),
    ("skew-symmetrizers", {"family": "dj", "n": 2}),
    ("skew-symmetrizers", {"family": "superflip", "n": 2}),
    ("bi-rank", {"family": "dj", "n": 2}),
    ("bi-rank", {"family": "dj", "n": 3}),
    ("bi-rank", {"family": "superflip", "n": 2}),
    ("ideal-self-check", {"family": "dj", "n": 2}),
    ("pbw-self-check", {"n": 2}),
    ("re-overline-form", {"family": "dj", "n": 2}),
    ("centrality", {"family": "dj", "n": 2, "k": 1}),
    ("centrality", {"family": "dj", "n": 2, "k": 2}),
    ("centrality", {"family": "dj", "n": 2, "k": 2, "element": "p"}),
    ("cayley-hamilton", {"family": "dj", "n": 2}),
    ("char-poly-forms", {"family": "dj", "n": 2}),
    ("modified-char-poly", {"family": "dj", "n": 2}),
    ("modified-char-poly", {"family": "flip", "n": 2}),
    ("capelli", {"n": 2}),
    ("capelli", {"n": 3}),
    ("shift-isomorphism", {"family": "dj", "n": 2}),
    ("representation", {"family": "dj", "n": 2, "which": "vector"}),
    ("representation", {"family": "dj", "n": 2, "which": "covector"}),
    ("representation", {"family": "dj", "n": 2, "which": "adjoint"}),
    ("braided-jacobi", {"family": "flip", "n": 2}),
    ("braided-jacobi", {"family": "superflip", "n": 2}),
    ("affine-cocycle", {"family": "flip", "n": 2}),
    ("affine-cocycle", {"family": "superflip", "n": 2}),
    ("sl-projection", {"family": "dj", "n": 2}),
]

FULL_SUITE = QUICK_SUITE + [
    ("yangian-chn", {"family": "dj", "n": 2, "k": 1}),
    ("yangian-chn", {"family": "dj", "n": 2, "k": 2}),
    ("yangian-newton", {"family": "dj", "n": 2, "k": 1}),
    ("yangian-newton", {"family": "dj", "n": 2, "k": 2}),
    ("chn-newton-trace", {"family": "dj", "n": 2}),
    ("bethe-commute", {"family": "dj", "n": 2, "k": 1, "l": 1}),
    ("bethe-commute", {"family": "dj", "n": 2, "k": 1, "l": 2}),
    ("bethe-commute", {"family": "dj", "n": 2, "k": 2, "l": 2}),
    ("qdet-central", {"family": "dj", "n": 2}),
    ("qdet-central", {"family": "flip", "n": 2}),
    ("evaluation", {"family": "dj", "n": 2}),
    ("evaluation", {"family": "flip", "n": 2}),
    ("rtt-yangian", {"family": "flip", "n": 2}),
    ("trig-algebra", {"n": 2}),
    ("trig-limit", {"family": "dj", "n": 2}),
    ("tau-leading-order", {"family": "dj", "n": 2, "k": 1}),
    ("tau-leading-order", {"family": "dj", "n": 2, "k": 2}),
    ("evaluate-sites", {"n": 2, "sites": "1"}),
    ("evaluate-sites", {"n": 2, "sites": "1,2"}),
    ("qh-naturality", {"n": 2, "k": 1, "sites": "1,2"}),
    ("qh-naturality", {"n": 2, "k": 2, "sites": "1,2"}),
    ("qh-commute", {"n": 2, "k": 1, "l": 2, "sites": "1,2"}),
    ("qh-commute", {"n": 2, "k": 2, "l": 2, "sites": "1,2"}),
    ("classical-poisson", {"n": 2, "k": 2, "l": 2, "sites": "1,2"}),
]
