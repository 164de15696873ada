#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hitreal/spectral.hpp"

namespace hitreal {

// Full topological type of a real configuration at genus g: the invariants
// (n, a) of the base involution together with the differential data
// (n_plus, u/2).
struct InvariantTuple {
    int n = 0;
    int a = 0;
    int n_plus = 0;
    int u_half = 0;

    friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
    friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
};

std::string to_string(const InvariantTuple& t);  // "(n, a, n_plus, u_half)"

// Constraints at genus g: (n, a) passes validate_invariants;
// 0 <= n_plus <= n; 0 <= u_half <= 2g - 2; u_half > 0 requires n_plus < n
// (an oval carrying a zero is never counted as sign-definite). Together these
// force n_plus = u_half = 0 when n = 0.
bool tuple_admissible(int g, const InvariantTuple& t);

// Every admissible tuple at genus g, lexicographically ordered; 26 at g = 2.
// Errors: UnsupportedGenus for g < 2.
std::vector<InvariantTuple> admissible_tuples(int g);

struct SearchBudget {
    bool use_grid = true;               // structured grid over root patterns
    long long random_configs = 100000;  // seeded random phase after the grid
    std::uint64_t seed = 12345;
};

// A configuration certifying that a tuple occurs: curve polynomial, zero data
// of the differential, and the involution analyzed.
struct Witness {
    Poly p;
    QuadDifferential q;
    InvolutionKind kind = InvolutionKind::ConjF;
};

// Rebuilds the curve and checks the witness from scratch: the sign analysis
// must reproduce the tuple, the circle-tracking count must equal its n_S, and
// the two component-count routes must agree. False on any mismatch.
bool verify_witness(const Witness& w, const InvariantTuple& t);

struct RealizeResult {
    InvariantTuple tuple;
    bool found = false;
    Witness witness;      // meaningful only when found
    long long tried = 0;  // configurations visited up to the hit, or in total
    std::string note;     // search statistics when nothing was found
};

using ConfigFn = std::function<bool(const HyperellipticCurve&, const QuadDifferential&,
                                    InvolutionKind)>;

// Streams the deterministic search order: grid curves (every count of real
// root pairs at genus g, both leading signs) with structured zero candidates
// (per-segment samples, same-segment pairs, a zero at infinity, conjugate
// pairs) under both conjugation lifts, then budget.random_configs seeded
// random configurations over a cached random curve pool. Every emitted
// configuration has conjugation-closed zeros away from the branch points.
// fn returns true to stop the walk. Returns the number of configurations
// emitted. Errors: UnsupportedGenus for g < 2.
long long enumerate_configurations(int g, const SearchBudget& budget, const ConfigFn& fn);

// Searches the stream for a configuration realizing the tuple; a hit is
// re-verified by verify_witness before being accepted. An exhausted budget is
// reported in the result, not as an error. Errors: InvalidQuery when the
// tuple is not admissible at genus g.
RealizeResult realize(const InvariantTuple& t, int g, const SearchBudget& budget = {});

struct CensusReport {
    int g = 0;
    SearchBudget budget;
    std::vector<RealizeResult> results;   // one per admissible tuple, in order
    std::vector<InvariantTuple> missing;  // tuples with no hit within budget
    long long tried_total = 0;

    int admissible_count() const { return static_cast<int>(results.size()); }
    int realized_count() const {
        return admissible_count() - static_cast<int>(missing.size());
    }
};

// Single pass over the configuration stream assigning each admissible tuple
// its first verified hit; runs to the full budget unless every tuple has been
// realized. At g = 2 this yields 26 admissible, 25 realized, and the single
// missing tuple (1, 0, 0, 1).
CensusReport census(int g, const SearchBudget& budget = {});

}  // namespace hitreal
