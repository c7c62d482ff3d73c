#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynalg/functionals.hpp"
#include "dynalg/propagator.hpp"

namespace dynalg {

enum class SuiteKind { Weyl, Loop, Causal, Moment, EulerLagrange, Interaction, Convergence };

std::string to_string(SuiteKind k);
SuiteKind suite_from_string(const std::string& s);

// Everything a verification run depends on; the seed fixes every random
// draw, so reports are reproducible.
struct Scenario {
    SuiteKind suite = SuiteKind::Moment;
    std::uint64_t seed = 42;
    int n = 2048;
    double x_min = -20.0;
    double length = 40.0;
    double dt = 1e-3;
    Scheme scheme = Scheme::Strang;
    HConvention h_convention = HConvention::Consistent;
    SignConvention sign_convention = SignConvention::S4;
    std::map<std::string, double> tolerance_overrides; // by record name
    std::optional<double> tol_floor; // loosen every default up to this
    bool quick = false;              // reduced scenario counts (smoke runs)
};

struct Record {
    std::string name;
    std::string kind; // "residual" | "exact" | "slope" | "phase"
    double value = 0.0;
    double tolerance = 0.0;
    std::optional<double> target; // slope / phase records compare |value - target|
    bool pass = false;
    std::vector<std::pair<double, double>> series; // optional (dt, value)
};

struct Report {
    Scenario scenario;
    std::vector<Record> records; // sorted by name
    bool overall = false;
    double total_seconds = 0.0;
};

// Applies target comparison, tolerance overrides and the floor; appends.
void push_record(std::vector<Record>& out, const Scenario& sc, Record r);

Report finish_report(const Scenario& sc, std::vector<Record> records, double seconds);

} // namespace dynalg
