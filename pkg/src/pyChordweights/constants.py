# coding: utf-8

"""Python constant file."""

# Degree caps
MAX_UNMARKED_DEGREE = 6
MAX_MARKED_DEGREE = 4
MAX_UNMARKED_SPAN_DEGREE = 5
MAX_MARKED_SPAN_DEGREE = 4

# Diagram text format
MARK_TOKEN = "#"

# Relation kinds
ONE_TERM = "one_term"
FOUR_TERM = "four_term"
TWO_TERM = "two_term"
EXTENDED_TWO_TERM = "extended_two_term"
RELATION_KINDS = (ONE_TERM, FOUR_TERM, TWO_TERM, EXTENDED_TWO_TERM)
MARKED_KINDS = (EXTENDED_TWO_TERM,)

# CLI spelling of the relation kinds
CLI_KINDS = {
    "1t": ONE_TERM,
    "4t": FOUR_TERM,
    "2t": TWO_TERM,
    "ext2t": EXTENDED_TWO_TERM,
}

# Quotient spaces (chord diagrams mod 4T, mod 2T, marked diagrams mod extended 2T)
SPACE_A = "A"
SPACE_B = "B"
SPACE_B_MARKED = "B_marked"
SPACE_RELATIONS = {
    SPACE_A: FOUR_TERM,
    SPACE_B: TWO_TERM,
    SPACE_B_MARKED: EXTENDED_TWO_TERM,
}
CLI_SPACES = {
    "a": SPACE_A,
    "b": SPACE_B,
    "bm": SPACE_B_MARKED,
}

# Polynomial symbols; graph polynomials in x are stored with x -> b
SYMBOL_A = "a"
SYMBOL_B = "b"
SYMBOL_X = "x"

# Functional identifiers
CONWAY = "conway"
HOMFLY = "homfly"
HOMFLY_DEFRAMED = "homfly_deframed"
KAUFFMAN = "kauffman"
KAUFFMAN_DEFRAMED = "kauffman_deframed"
RANK = "rank"
RANK_DEFRAMED = "rank_deframed"
S_POLY = "s"
S_DEFRAMED = "s_deframed"
T_POLY = "t"
T_DEFRAMED = "t_deframed"
T_DEFRAMED_DISPLAYED = "t_deframed_displayed"
NULLITY = "nullity"
NULLITY_MARKED = "nullity_marked"
COMPONENTS = "components"

# Report keys of the `invariants` command, in emission order
INVARIANTS_KEYS = (
    "diagram",
    "degree",
    "rank",
    "det",
    "nullity",
    "components",
    "conway",
    "homfly",
    "homfly_deframed",
    "kauffman",
    "kauffman_deframed",
)

# Stress-test defaults
RANDOM_SEED = 20240229
SLIDE_SEQUENCES = 1000
SLIDE_SEQUENCE_LENGTH = 12
MULTIPLICATIVITY_PAIRS = 500
MULTIPLICATIVITY_MAX_VERTICES = 6

# Parallelism
WORKERS_ENV_VAR = "PYCHORDWEIGHTS_WORKERS"

# CLI exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_CHECK_FAILED = 2
