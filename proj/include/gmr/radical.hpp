#pragma once

// Baer radical engines: m-nilpotency on the m-step graph, intersections of
// prime ideals, the largest nilpotent ideal, and the maximal g.m. ideal
// that is its own radical. verify_radical_theorems cross-checks all of them
// together with the componentwise Gamma-ring radicals.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmr/gm_ring.hpp"

namespace gmr {

/// Directed graph on a carrier with edges x -> x u x, u ranging over a
/// multiplier set U. Nodes are positions into `nodes`.
struct MStepGraph {
  std::vector<Index> nodes;       // carrier element ids, ascending; nodes[0] == 0
  std::vector<Index> multipliers; // members of U, ascending
  std::vector<std::vector<std::uint32_t>> successors;
  std::function<Index(Index, Index)> step;  // (x, u) -> x u x
  std::function<std::string(Index)> format;

  std::uint32_t node_of(Index element) const;
  std::size_t edge_count() const;
};

/// Ring case: carrier and multipliers are the whole ring.
MStepGraph m_step_graph(const GMRing& ring, const Caps& caps = {});
/// An ideal N regarded as a ring: carrier and multipliers are N.
MStepGraph m_step_graph(const GMRing& ring, const Subgroup& ideal, const Caps& caps = {});
/// Gamma-ring case: carrier A_ij, multipliers A_ji, x u x composed through
/// mu_iji then mu_iij.
MStepGraph m_step_graph(const GammaSystem& system, std::size_t i, std::size_t j, const Caps& caps = {});

/// Per-node decision: a node is persistent when it lies on a cycle of the
/// graph restricted to nonzero nodes; x is m-nilpotent iff x = 0 or x
/// reaches no persistent node.
struct MNilpotency {
  std::vector<std::uint8_t> persistent;
  std::vector<std::uint8_t> nilpotent;
};
MNilpotency analyze_m_nilpotency(const MStepGraph& g);

/// For a non-m-nilpotent x: an eventually periodic m-sequence
/// a_1 = x, a_{n+1} = a_n u_n a_n avoiding 0, as a lead-in followed by a
/// cycle, each step with its multiplier. For an m-nilpotent x: the set of
/// elements reachable from x.
struct MSequenceCertificate {
  bool nilpotent = true;
  std::vector<Index> lead;             // a_1 .. a_p (a_p starts the cycle)
  std::vector<Index> lead_multipliers; // u_1 .. u_{p-1}
  std::vector<Index> cycle;            // a_p .. a_q with a_q u a_q = a_p
  std::vector<Index> cycle_multipliers;
  std::vector<Index> reachable;

  std::string describe(const MStepGraph& g) const;
};

bool is_m_nilpotent(const MStepGraph& g, Index x, MSequenceCertificate* certificate = nullptr);

// ---------------------------------------------------------------------------

enum class RadicalMethod { MNilpotent, PrimesGM, PrimesRing, NilpotentIdeal, GMMaximal };
const char* to_string(RadicalMethod m);

struct RadicalResult {
  RadicalMethod method = RadicalMethod::MNilpotent;
  std::string carrier;
  std::vector<Index> members;                // canonical order
  std::vector<std::vector<Index>> primes;    // ideals intersected (primes_*)
  std::uint32_t nilpotency_exponent = 0;     // nilpotent_ideal
  bool decomposes = true;                    // m_nilpotent on a g.m. ring
  std::vector<std::string> notes;
};

/// W(A): the m-nilpotent elements of A.
RadicalResult w_set(const GMRing& ring, const Caps& caps = {});

/// Baer radical of the A_ji-ring A_ij (members are A_ij indices).
RadicalResult gamma_baer_radical(const GammaSystem& system, std::size_t i, std::size_t j, const Caps& caps = {});

enum class Primality { Prime, SemiprimeOnly, Neither };
const char* to_string(Primality p);

struct PrimalityResult {
  Primality primality = Primality::Neither;
  Index witness_x = 0;  // x, y outside B with xAy in B (or xAx for semiprimality)
  Index witness_y = 0;
};

/// Throws InvalidInput for the improper ideal.
PrimalityResult ideal_primality(const GMRing& ring, const GMIdeal& b);

RadicalResult radical_via_primes(const GMRing& ring, Flavor flavor, const Caps& caps = {});
RadicalResult largest_nilpotent_ideal(const GMRing& ring, const Caps& caps = {});
/// Throws Violation (code E_UNIQUENESS) if two incomparable maximal
/// candidates exist.
RadicalResult gm_maximal_rb_ideal(const GMRing& ring, const Caps& caps = {});

RadicalResult compute_radical(const GMRing& ring, RadicalMethod method, const Caps& caps = {});

/// Gamma-ring primeness of A_st over A_ts, decided on principal Gamma-ideals
/// (any nonzero Gamma-ideal contains one).
struct GammaPrimality {
  bool semiprime = true;
  bool prime = true;
  Index semiprime_witness = 0;
  std::pair<Index, Index> prime_witness{0, 0};
};
GammaPrimality gamma_ring_primality(const GammaSystem& system, std::size_t s, std::size_t t);

struct RadicalTheoremReport {
  TheoremReport report;
  std::vector<RadicalResult> methods;      // in RadicalMethod order
  std::vector<RadicalResult> components;   // gamma_baer_radical, row-major (i,j)
  std::vector<Index> component_sum;        // sum of component radicals as ring members
  bool semiprime = false;
  bool prime = false;
};

RadicalTheoremReport verify_radical_theorems(const GMRing& ring, const Caps& caps = {});

}  // namespace gmr
