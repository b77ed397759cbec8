"""
Normal forms in a right-angled Artin group
==========================================

Words are reduced by cancelling across commuting letters and then written in
the least order the commutations allow.
"""
from raagflags.graph import parse_graph
from raagflags.words import conjugacy_search, format_word, is_identity, multiply, normal_form

# the path a - b - c: b commutes with both ends, a and c generate a free group
g = parse_graph("a b\nb c\n")

for w in ["a b a^-1", "a c a^-1 c^-1", "c b a b^-1", "b^2 a b^-1 a^-1"]:
    print(f"{w:20} -> {format_word(normal_form(g, w)) or '1'}")

print(is_identity(g, "b a b^-1 a^-1"), is_identity(g, "a c a^-1 c^-1"))
print(format_word(multiply(g, "a b", "b^-1 c")))

# conjugacy is a bounded search; a miss says nothing beyond the radius
print(conjugacy_search(g, "c", "a c a^-1", 1))
print(conjugacy_search(g, "a", "c", 3))
