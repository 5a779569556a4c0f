#pragma once

#include "coquecigrue/formal_group.hpp"
#include "coquecigrue/lm.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coquecigrue {

// One parsed "label: coeff, label: coeff" combination, coefficients kept
// as text until validation resolves labels and parses rationals.
struct LinearCombo {
    std::vector<std::pair<std::string, std::string>> terms;
    bool operator==(const LinearCombo&) const = default;
};

struct BracketEntry {
    std::string left, right;
    LinearCombo value;
    bool operator==(const BracketEntry&) const = default;
};

struct DeltaEntry {
    std::string label;
    LinearCombo value;
    bool operator==(const DeltaEntry&) const = default;
};

// The line-based input format:
//   name = heisenberg
//   kind = lie | leibniz | lm
//   basis = x, y, z
//   bracket x y = z: 1
// and for kind lm additionally
//   module_basis = u, v
//   action u x = u: 1/2
//   delta u = x: 1
// '#' starts a comment, unspecified entries are zero.
struct InputDocument {
    std::string name = "unnamed";
    std::string kind;
    std::vector<std::string> basis;
    std::vector<BracketEntry> brackets;
    std::vector<std::string> module_basis;
    std::vector<BracketEntry> action;
    std::vector<DeltaEntry> delta;
    std::string digest; // of the source bytes

    bool operator==(const InputDocument&) const = default;
};

InputDocument parse_document_text(std::string_view text, const std::string& source_name);
InputDocument parse_input(const std::string& path);
std::string serialize_document(const InputDocument& doc);

AlgebraPresentation algebra_from_document(const InputDocument& doc);
// kind lm only; axioms are checked by the caller, not here
LMLieAlgebra lm_algebra_from_document(const InputDocument& doc);

std::string fnv1a64_hex(std::string_view bytes);

struct RunOptions {
    unsigned order = 4;
    unsigned degree = 3;
    std::string triv = "left"; // left | sym | both
    bool json = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::vector<AxiomViolation> violations;
};

struct RunReport {
    std::string command;
    std::string input_name;
    std::string input_kind;
    std::string input_digest;
    RunOptions options;
    std::vector<CheckResult> checks;
    nlohmann::ordered_json payload;
    double elapsed_seconds = 0.0;

    bool ok() const;
    // deterministic: timing deliberately left out
    std::string to_json() const;
    std::string to_text() const;
};

// command is one of check, liezation, envelope, integrate, oracle.
// Precondition failures (wrong axioms for the requested operation) come
// back as failed checks, not exceptions; exceptions are for input errors.
RunReport run_command(const std::string& command, const InputDocument& doc,
                      const RunOptions& options);

} // namespace coquecigrue
