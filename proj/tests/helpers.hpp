#pragma once

#include <random>

#include "skein/ratfn.hpp"

namespace skein::testing {

// Deterministic RNG: fixed seeds only, results must be reproducible.
using Rng = std::mt19937_64;

inline BiLaurent random_bilaurent(Rng& rng, int max_terms = 4, int max_exp = 2, int max_coeff = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int32_t> exp(-max_exp, max_exp);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    BiLaurent p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(Exp{exp(rng), exp(rng)}, Rat(coeff(rng)));
    return p;
}

inline RatFn random_ratfn(Rng& rng) {
    BiLaurent num = random_bilaurent(rng);
    BiLaurent den;
    while (den.is_zero()) den = random_bilaurent(rng);
    return RatFn(num, den);
}

inline RatFn random_nonzero_ratfn(Rng& rng) {
    RatFn r;
    while (r.is_zero()) r = random_ratfn(rng);
    return r;
}

}  // namespace skein::testing
