#include "siegel/document.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace siegel {

namespace {

Json array_of(const RealMatrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix matrix_of(const Json& rows, const char* field) {
    if (!rows.is_array() || rows.empty()) {
        throw ParseError(std::string("document: '") + field +
                         "' must be a non-empty array of rows");
    }
    const Index r = static_cast<Index>(rows.size());
    const Index c = static_cast<Index>(rows[0].size());
    RealMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || static_cast<Index>(row.size()) != c) {
            throw ParseError(std::string("document: ragged rows in '") + field + "'");
        }
        for (Index j = 0; j < c; ++j) {
            if (!row[j].is_number()) {
                throw ParseError(std::string("document: non-numeric entry in '") +
                                 field + "'");
            }
            const double e = row[j].get<double>();
            if (!std::isfinite(e)) {
                throw ParseError(std::string("document: non-finite entry in '") +
                                 field + "'");
            }
            m(i, j) = e;
        }
    }
    return m;
}

}  // namespace

MatrixDocument MatrixDocument::from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("document: expected a JSON object");
    MatrixDocument doc;
    doc.kind = j.value("kind", "matrix");
    if (doc.kind != "matrix" && doc.kind != "siegel_point" &&
        doc.kind != "symplectic") {
        throw ParseError("document: unknown kind '" + doc.kind + "'");
    }
    if (!j.contains("re") || !j.contains("im")) {
        throw ParseError("document: both 're' and 'im' are required");
    }
    RealMatrix re = matrix_of(j["re"], "re");
    RealMatrix im = matrix_of(j["im"], "im");
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
        throw ParseError("document: 're' and 'im' shapes differ");
    }
    doc.value = re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();

    const Index rows = doc.value.rows();
    if (doc.kind == "symplectic") {
        if (rows != doc.value.cols() || rows % 2 != 0) {
            throw ParseError("document: symplectic matrices must be 2n x 2n");
        }
        doc.n = rows / 2;
    } else {
        doc.n = rows;
    }
    if (j.contains("n")) {
        const Index declared = j["n"].get<Index>();
        if (declared != doc.n) {
            throw ParseError("document: declared n does not match the array shape");
        }
    }
    return doc;
}

MatrixDocument MatrixDocument::from_matrix(const Matrix& m, std::string kind) {
    MatrixDocument doc;
    doc.kind = std::move(kind);
    doc.value = m;
    doc.n = doc.kind == "symplectic" ? m.rows() / 2 : m.rows();
    return doc;
}

Json MatrixDocument::to_json() const {
    return Json{{"kind", kind},
                {"n", n},
                {"re", array_of(value.real())},
                {"im", array_of(value.imag())}};
}

MatrixDocument read_document(const std::string& path_or_dash) {
    Json j;
    try {
        if (path_or_dash == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(path_or_dash);
            if (!in) throw ParseError("cannot open '" + path_or_dash + "'");
            j = Json::parse(in);
        }
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("document: invalid JSON: ") + e.what());
    }
    return MatrixDocument::from_json(j);
}

void write_document(const MatrixDocument& doc, const std::string& path_or_dash) {
    const std::string text = doc.to_json().dump(2);
    if (path_or_dash == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(path_or_dash);
        if (!out) throw Error("cannot write '" + path_or_dash + "'");
        out << text << "\n";
    }
}

Json SuiteReport::to_json() const {
    Json fails = Json::array();
    for (const TrialFailure& f : failures) {
        fails.push_back(Json{{"trial", f.trial},
                             {"inputs", f.inputs},
                             {"observed", f.observed},
                             {"expected", f.expected},
                             {"defect", f.defect}});
    }
    Json j{{"suite", suite},
           {"seed", seed},
           {"trials", trials},
           {"failures", std::move(fails)},
           {"max_defect", max_defect},
           {"wall_time", wall_time}};
    if (!extra.is_null()) j["extra"] = extra;
    return j;
}

}  // namespace siegel
