#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/qcm.hpp"

namespace qdc {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string witness; // first counterexample, empty when passed
};

struct VerifyBounds {
  int rank_max = 6;
  int lmax = 4;
  int mmax = 4;
  int num_qdata = 3;      // Q-data sampled per type (canonical + reflected)
  int random_pairs = 200; // random (i,p),(j,s) pairs for the pairing suites
  std::uint64_t seed = 20220401;
};

// Deterministic pseudo-random Q-data: the canonical one plus `count - 1`
// source-reflected variants.
std::vector<QDatum> sample_qdata(const GroundData& g, int count,
                                 std::uint64_t seed);

// The per-module Invariants & Properties suites for one type. `table`
// normally comes from invert_series; passing a corrupted table is how the
// mutation-sanity check works.
std::vector<SuiteResult> verify_type(const GroundData& g,
                                     const CoeffTable& table,
                                     const VerifyBounds& b);

// Runs verify_type over every type of rank <= b.rank_max.
std::vector<SuiteResult> verify_all(const VerifyBounds& b);

} // namespace qdc
