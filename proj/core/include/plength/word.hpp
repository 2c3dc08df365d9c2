// Words in a free group, stored as flat sequences of signed ordinals:
// the letter +k denotes generator k-1, the letter -k its inverse.
// Inverse generators are not separate symbols, so inversion is sign flip.
#pragma once

#include <cstddef>
#include <vector>

namespace plength {

using Letter = int;  // nonzero signed ordinal

inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? 1 : -1; }
inline Letter inverse(Letter l) { return -l; }
inline Letter make_letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }

using Word = std::vector<Letter>;

// Removes adjacent letter/inverse pairs until none remain.
Word free_reduce(const Word& w);

// Free reduction plus stripping of conjugating prefix/suffix pairs:
// the result is freely reduced and its first letter is not the inverse
// of its last.  The output is conjugate to the input in the free group.
Word cyclic_reduce(const Word& w);

Word inverse_word(const Word& w);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Lexicographically least rotation of w; used for rotation-invariant
// comparisons of cyclic words.
Word least_rotation(const Word& w);

// Canonical representative of w under rotation and inversion (applied to
// the cyclic reduction), for duplicate-relator detection.
Word canonical_cyclic(const Word& w);

}  // namespace plength
