#pragma once

#include "berncert/bernstein.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace berncert {

enum class Verdict { Proved, Split, Failed, Undecided };

std::string verdict_str(Verdict v);
Verdict verdict_parse(const std::string& s);

// A named sub-proof the certifier may use to discharge a box that Bernstein
// subdivision cannot decide (typically because the bound is attained on the
// box). The function must return true only if it has verified
// objective <= bound on the whole box by its own argument; returning false
// means "not applicable here", not "disproved".
using HandChainFn =
    std::function<bool(const MultiPoly& objective, const Box& box, const Rational& bound)>;

void register_hand_chain(const std::string& name, HandChainFn fn);
bool hand_chain_registered(const std::string& name);

struct SubdivisionPolicy {
    // Split pattern per level; levels beyond the schedule bisect the variable
    // with the largest Bernstein coefficient spread (ties: lowest index).
    std::vector<std::vector<int>> schedule;
    int max_depth = 16;
    // Named sub-proofs this run may consult, in consultation order.
    std::vector<std::string> hand_chains;
};

struct CertNode {
    Box box;
    Rational max_beta;
    Verdict verdict = Verdict::Undecided;
    std::vector<int> splits;    // set iff verdict == Split
    std::vector<int> children;  // indices into Certificate::nodes, ascending
    std::string subproof;       // hand-chain name when discharged by one
    std::vector<Rational> witness_point;  // set iff verdict == Failed
    Rational witness_value;
};

// Replayable proof tree: breadth-first node list over a box partition.
// Everything needed to re-check the claim from scratch is inside.
struct Certificate {
    int version = 1;
    MultiPoly objective;
    std::string objective_hash;
    Rational bound;
    bool strict = false;
    std::vector<int> degrees;
    Verdict overall = Verdict::Undecided;
    std::vector<CertNode> nodes;
};

// FNV-1a 64 over the canonical interchange serialization.
std::string objective_hash(const MultiPoly& p);

// Attempts to prove p <= bound (p < bound when strict) everywhere on box.
// Per node: accept by Bernstein max, disprove by an exact witness value at a
// box corner or the center, discharge through an allowed hand chain, else
// subdivide until the depth budget runs out.
Certificate certify_upper_bound(const MultiPoly& p, const Box& box, const Rational& bound,
                                const SubdivisionPolicy& policy, bool strict = false);

struct ReplayResult {
    bool accepted = false;
    std::string reason;  // empty iff accepted
    int node = -1;       // offending node when applicable
};

// Recomputes every node from scratch: tensor maxima, witness values,
// child-box tiling, hand-chain discharge, and the overall verdict.
ReplayResult certificate_replay(const Certificate& cert);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// Largest recorded Bernstein max among undecided leaves, if any.
std::optional<std::pair<int, Rational>> worst_residual(const Certificate& cert);

}  // namespace berncert
