"""Frozen reference data shared by the test modules.

Everything here was either transcribed from the reference tables this
library reproduces or computed by an independent oracle noted at the
constant.  Values are intentionally duplicated from the source tree so a
source-side edit cannot silently change the expectations.
"""

# Reference enumerations (reversal pairs adjacent).
CO4_ORDER = ("ACBD", "ADBC", "ABCD", "ADCB", "ABDC", "ACDB")
CO5_ORDER = (
    "ABCDE", "AEDCB", "ABCED", "ADECB", "ABDCE", "AECDB",
    "ABDEC", "ACEDB", "ABECD", "ADCEB", "ABEDC", "ACDEB",
    "ACBDE", "AEDBC", "ACDBE", "AEBDC", "ACEBD", "ADBEC",
    "ADBCE", "AECBD", "AEBCD", "ADCBE", "ACBED", "ADEBC",
)
ROLO4_ORDER = (
    "A|D,C", "B|C,D", "D|B,A", "C|A,B",
    "C|B,A", "D|A,B", "A|C,D", "B|D,C",
    "A|D,B", "C|B,D", "B|A,C", "D|C,A",
    "B|C,A", "D|A,C", "C|D,B", "A|B,D",
    "D|B,C", "A|C,B", "B|A,D", "C|D,A",
    "C|A,D", "B|D,A", "D|C,B", "A|B,C",
)
TRAD4_FIRST = ("AB-DA", "AB-CB", "AB-BD", "AB-AC")

# The 24-ballot two-point/one-point rule, cell for cell.
ROLO21_MATRIX = (
    (2, 2, 2, 2, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1),
    (0, 0, 0, 0, 2, 2, 2, 2, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0),
    (1, 0, 1, 0, 1, 0, 0, 1, 2, 2, 2, 2, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0),
    (0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 2, 2, 2, 2, 1, 0, 0, 1, 0, 1, 0, 1),
    (0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 2, 2, 2, 2, 0, 0, 0, 0),
    (1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 2, 2, 2, 2),
)

# Letter pattern of the 3-parameter family on 4-item cyclic ballots.
GENERIC4_LETTERS = (
    "abcccc",
    "bacccc",
    "ccabcc",
    "ccbacc",
    "ccccab",
    "ccccba",
)

# Letter pattern of the 6-parameter family on a regular 24-ballot space.
ROLO_GENERIC_LETTERS = (
    "aaaabbbbcdefcdfecdfecdef",
    "bbbbaaaadcfedcefdcefdcfe",
    "cdfecdefaaaabbbbefcdfecd",
    "dcefdcfebbbbaaaafedcefdc",
    "efcdfecdfecdefcdaaaabbbb",
    "fedcefdcefdcfedcbbbbaaaa",
)

# Letter pattern of the 8-parameter family on 5-item cyclic ballots.  In
# the row for outcome (ABECD), the (AEBCD)/(ADCBE) columns are "c d":
# neutrality (orbit propagation from the anchors) and the forced symmetry
# s(g,h) = s(h,g) pin them, since (AEBCD) is an adjacent-seat swap of
# (ABECD) itself and (ADCBE) one of its reversal.
GENERIC5_LETTERS = (
    "abcdcdefefdccdefghefcdfe",
    "badcdcfefecddcfehgfedcef",
    "cdabefdccdeffeghefcdefcd",
    "dcbafecddcfeefhgfedcfedc",
    "cdefabcddcefefdcefcdfehg",
    "dcfebadccdfefecdfedcefgh",
    "efdccdabefcdcdfedcfehgfe",
    "fecddcbafedcdcefcdefghef",
    "efcddcefabcdhgefdcfecdef",
    "fedccdfebadcghfecdefdcfe",
    "dcefefcdcdabfedcfehgfecd",
    "cdfefedcdcbaefcdefghefdc",
    "cdfeefcdghfeabcdefdcfecd",
    "dceffedchgefbadcfecdefdc",
    "efhgdcfeefdccdabdcefdcef",
    "feghcdeffecddcbacdfecdfe",
    "hgefefdcdcfeefdcabdcefcd",
    "ghfefecdcdeffecdbacdfedc",
    "efcdcdfefeghdcefdcabdcfe",
    "fedcdcefefhgcdfecdbacdef",
    "cdeffeghcdfefedcefdcabdc",
    "dcfeefhgdcefefcdfecdbacd",
    "fecdghfeefcdcdefcdfedcab",
    "efdchgeffedcdcfedcefcdba",
)

# Worked 6x6 example rules.
EX_RULE_210 = (
    (2, 1, 0, 0, 0, 0),
    (1, 2, 0, 0, 0, 0),
    (0, 0, 2, 1, 0, 0),
    (0, 0, 1, 2, 0, 0),
    (0, 0, 0, 0, 2, 1),
    (0, 0, 0, 0, 1, 2),
)
EX_RULE_201 = (
    (2, 0, 1, 1, 1, 1),
    (0, 2, 1, 1, 1, 1),
    (1, 1, 2, 0, 1, 1),
    (1, 1, 0, 2, 1, 1),
    (1, 1, 1, 1, 2, 0),
    (1, 1, 1, 1, 0, 2),
)
EX_RULE_REVERSAL_CONTRAST = (
    (1, -1, 0, 0, 0, 0),
    (-1, 1, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 0, -1, 1, 0, 0),
    (0, 0, 0, 0, 1, -1),
    (0, 0, 0, 0, -1, 1),
)

# The 24-ballot paradox profile and its exact tally (the scores were
# computed by hand from ROLO21_MATRIX as an independent check).
PARADOX_PROFILE = (
    141, 141, 141, 141, 73, 313, 133, 253, 133, 159, 99, 193,
    223, 9, 103, 129, 193, 159, 133, 219, 163, 9, 9, 163,
)
PARADOX_SCORES = (2432, 2336, 2240, 2240, 2240, 2240)

# Sum-zero profile: +1 on the four ballots of one order, -1 on its
# reversal's four, and +/-1 on the single-adjacency ballots so that the rule
# above maps it to a complete tie.  Derived as p3 - (row1 - row2) of
# ROLO21_MATRIX with p3 the +/-3 block profile.
TIE_SPACE_PROFILE = (
    1, 1, 1, 1, -1, -1, -1, -1, -1, 1, 1, -1,
    -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1,
)

# The 24-ballot diagonal/adjacency profile and its exact tally under the
# two-point/one-point diagonal rule (scores hand-computed).
TRAD_PROFILE = (
    218, 198, 128, 128, 218, 198, 128, 128, 26, 26, 186, 186,
    6, 6, 166, 166, 0, 0, 250, 230, 0, 0, 250, 230,
)
TRAD_SCORES = (2048, 2048, 2128, 1968, 2048, 2048)

# Irreducible character tables (standard references), classes in descending
# lexicographic order of cycle type, rows in the same partition order.
S4_CLASSES = ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
S4_CHARACTER_TABLE = {
    (4,): (1, 1, 1, 1, 1),
    (3, 1): (-1, 0, -1, 1, 3),
    (2, 2): (0, -1, 2, 0, 2),
    (2, 1, 1): (1, 0, -1, -1, 3),
    (1, 1, 1, 1): (-1, 1, 1, -1, 1),
}
S5_CLASSES = ((5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1))
S5_CHARACTER_TABLE = {
    (5,): (1, 1, 1, 1, 1, 1, 1),
    (4, 1): (-1, 0, -1, 1, 0, 2, 4),
    (3, 2): (0, -1, 1, -1, 1, 1, 5),
    (3, 1, 1): (1, 0, 0, 0, -2, 0, 6),
    (2, 2, 1): (0, 1, -1, -1, 1, -1, 5),
    (2, 1, 1, 1): (-1, 0, 1, 1, 0, -2, 4),
    (1, 1, 1, 1, 1): (1, -1, -1, 1, 1, -1, 1),
}
