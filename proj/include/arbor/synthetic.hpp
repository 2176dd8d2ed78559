#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arbor/tits.hpp"

namespace arbor {

/// Vertices of R_n as reduced words over the letters 0..n-1 (no letter repeated
/// consecutively); the word of a vertex is its direction labels from the
/// basepoint, matching RegularTruncation::word. Every letter is an involution,
/// so R_n is the Cayley graph of the free product of n copies of Z/2.
using Word = std::vector<unsigned>;

/// An automorphism of R_n given by its action on words.
using WordMap = std::function<Word(const Word&)>;

/// Appends `c` to `w`, cancelling if w ends in c.
void push_letter(Word& w, unsigned c);
/// g * w, reduced.
Word multiply(const Word& g, const Word& w);

/// w -> g w. Its inverse is left multiplication by the reversed word.
WordMap left_multiply(Word g);
/// w -> letterwise pi(w). Fixes the basepoint.
WordMap relabel(std::vector<unsigned> pi);
/// A basepoint-fixing automorphism choosing a pseudo-random local permutation at
/// every vertex (hashed from `seed` and the vertex word; about half are trivial).
WordMap portrait(unsigned n, std::uint64_t seed);
/// a o b
WordMap compose(WordMap a, WordMap b);

/// Presents `phi` on B(r) of R_n, with the smallest ambient radius R >= r that
/// holds every image of B(r) and keeps images of B(r-1) off the rim.
BallPresentation present(unsigned n, unsigned r, const WordMap& phi);

/// Presents alpha o phi o alpha^-1 on B(r). alpha must move the basepoint by at
/// most `alpha_reach`; its inverse on B(r) is found by search in B(r + alpha_reach).
BallPresentation present_conjugate(unsigned n, unsigned r, const WordMap& alpha, const WordMap& phi,
                                   unsigned alpha_reach);

}  // namespace arbor
