#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cqmv/eisenstein.hpp"
#include "cqmv/gaussian.hpp"
#include "cqmv/types.hpp"

namespace cqmv {

// One tested identity instance.
struct CheckRow {
    std::string identity;
    std::string params;
    double discrepancy = 0;
    bool pass = true;
};

// Streaming consumer for per-instance rows; may be empty.
using RowSink = std::function<void(const CheckRow&)>;

struct SuiteSummary {
    std::string suite;
    int order = 0;
    int64_t checked = 0;
    int64_t failed = 0;
    double max_discrepancy = 0;
    bool pass() const { return checked > 0 && failed == 0; }
};

// Named suites; max_norm = 0 keeps each identity at its documented range.
// Suites: reciprocity, gauss-identities, tau-relations, poisson, bijection, pv.
SuiteSummary run_suite(const std::string& suite, int order, int64_t max_norm, const RowSink& sink);
const std::vector<std::string>& suite_names();

// All primary elements with norm <= max_norm, ascending (norm, b, a).
std::vector<EisInt> primary_elements_w(int64_t max_norm);
std::vector<GaussInt> primary_elements_i(int64_t max_norm);

}  // namespace cqmv
