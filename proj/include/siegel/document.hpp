#pragma once

// Wire format for matrices: a JSON document with separate real and
// imaginary arrays, plus the machine-readable suite report.

#include "siegel/core.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace siegel {

using Json = nlohmann::json;

struct ParseError : Error {
    using Error::Error;
};

// {"kind": "matrix"|"siegel_point"|"symplectic", "n": ..., "re": [[..]],
//  "im": [[..]]}.  For "symplectic", n is the block dimension and the
// arrays are 2n x 2n.
struct MatrixDocument {
    std::string kind = "matrix";
    Index n = 0;
    Matrix value;

    static MatrixDocument from_json(const Json& j);
    static MatrixDocument from_matrix(const Matrix& m, std::string kind);
    Json to_json() const;
};

MatrixDocument read_document(const std::string& path_or_dash);
void write_document(const MatrixDocument& doc, const std::string& path_or_dash);

struct TrialFailure {
    long trial = 0;
    Json inputs;    // full reproduction inputs as matrix documents
    Json observed;
    Json expected;
    double defect = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<TrialFailure> failures;
    double max_defect = 0.0;
    double wall_time = 0.0;
    Json extra;  // suite-specific tallies (the converse probe)

    Json to_json() const;
    int exit_code() const { return failures.empty() ? 0 : 1; }
};

}  // namespace siegel
