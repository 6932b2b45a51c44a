#include "syscodes/complex_io.h"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "syscodes/error.h"

namespace syscodes {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

size_t index_at(const json &value, const std::string &field, size_t limit) {
    if (!value.is_number_integer() || value.get<int64_t>() < 0) {
        fail(field, "expected a non-negative integer");
    }
    auto index = value.get<size_t>();
    if (index >= limit) {
        fail(field, "index " + std::to_string(index) + " out of range (limit " + std::to_string(limit) + ")");
    }
    return index;
}

const json &array_at(const json &value, const std::string &field) {
    if (!value.is_array()) {
        fail(field, "expected an array");
    }
    return value;
}

BitMatrix rows_from_json(const json &rows, const std::string &field, size_t n) {
    BitMatrix m(0, n);
    size_t r = 0;
    for (const auto &row : array_at(rows, field)) {
        std::string row_field = field + "[" + std::to_string(r) + "]";
        BitVector v(n);
        size_t j = 0;
        for (const auto &entry : array_at(row, row_field)) {
            v.flip(index_at(entry, row_field + "[" + std::to_string(j) + "]", n));
            j++;
        }
        m.append_row(v);
        r++;
    }
    return m;
}

CssCode parse_css(const json &doc) {
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int64_t>() < 1) {
        fail("n", "expected a positive integer");
    }
    auto n = doc["n"].get<size_t>();
    for (const char *key : {"v1", "v2"}) {
        if (!doc.contains(key)) {
            fail(key, "missing");
        }
    }
    return build_css(rows_from_json(doc["v1"], "v1", n), rows_from_json(doc["v2"], "v2", n));
}

CellComplex parse_complex(const json &doc) {
    if (!doc.contains("dims")) {
        fail("dims", "missing");
    }
    std::vector<size_t> dims;
    size_t p = 0;
    for (const auto &count : array_at(doc["dims"], "dims")) {
        std::string field = "dims[" + std::to_string(p++) + "]";
        if (!count.is_number_integer() || count.get<int64_t>() < 0) {
            fail(field, "expected a non-negative integer");
        }
        dims.push_back(count.get<size_t>());
    }
    if (dims.empty()) {
        fail("dims", "expected at least one dimension");
    }
    if (!doc.contains("boundary")) {
        fail("boundary", "missing");
    }
    const json &boundary = array_at(doc["boundary"], "boundary");
    if (boundary.size() != dims.size() - 1) {
        fail("boundary", "expected " + std::to_string(dims.size() - 1) + " maps, got " +
                             std::to_string(boundary.size()));
    }
    std::vector<BitMatrix> maps;
    for (size_t q = 1; q < dims.size(); q++) {
        std::string field = "boundary[" + std::to_string(q - 1) + "]";
        const json &columns = array_at(boundary[q - 1], field);
        if (columns.size() != dims[q]) {
            fail(field, "expected " + std::to_string(dims[q]) + " columns, got " + std::to_string(columns.size()));
        }
        BitMatrix m(dims[q - 1], dims[q]);
        for (size_t c = 0; c < dims[q]; c++) {
            std::string col_field = field + "[" + std::to_string(c) + "]";
            size_t j = 0;
            for (const auto &entry : array_at(columns[c], col_field)) {
                m.flip(index_at(entry, col_field + "[" + std::to_string(j++) + "]", dims[q - 1]), c);
            }
        }
        maps.push_back(std::move(m));
    }
    CellComplex complex(dims, std::move(maps));
    if (doc.contains("labels")) {
        std::vector<std::vector<std::string>> labels;
        const json &all = array_at(doc["labels"], "labels");
        if (all.size() != dims.size()) {
            fail("labels", "expected one list per dimension");
        }
        for (size_t q = 0; q < all.size(); q++) {
            std::string field = "labels[" + std::to_string(q) + "]";
            const json &names = array_at(all[q], field);
            if (names.size() != dims[q]) {
                fail(field, "expected " + std::to_string(dims[q]) + " labels");
            }
            std::vector<std::string> row;
            for (const auto &name : names) {
                if (!name.is_string()) {
                    fail(field, "expected strings");
                }
                row.push_back(name.get<std::string>());
            }
            labels.push_back(std::move(row));
        }
        complex.set_labels(std::move(labels));
    }
    if (doc.contains("closed_surface")) {
        if (!doc["closed_surface"].is_boolean()) {
            fail("closed_surface", "expected a boolean");
        }
        complex.set_trusted_closed_surface(doc["closed_surface"].get<bool>());
    }
    validate_complex(complex);
    return complex;
}

}  // namespace

InputFile parse_input(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("<root>", "expected an object");
    }
    InputFile out;
    if (doc.contains("v1") || doc.contains("v2")) {
        out.css = parse_css(doc);
    } else {
        out.complex = parse_complex(doc);
    }
    return out;
}

InputFile load_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_input(text.str());
}

std::string complex_to_json(const CellComplex &c) {
    json doc;
    doc["dims"] = c.cell_counts();
    json boundary = json::array();
    for (size_t p = 1; p <= c.dim(); p++) {
        const BitMatrix &m = c.boundary(p);
        json columns = json::array();
        for (size_t col = 0; col < m.cols(); col++) {
            columns.push_back(m.column(col).support());
        }
        boundary.push_back(std::move(columns));
    }
    doc["boundary"] = std::move(boundary);
    if (!c.labels().empty()) {
        doc["labels"] = c.labels();
    }
    if (c.trusted_closed_surface()) {
        doc["closed_surface"] = true;
    }
    return doc.dump();
}

}  // namespace syscodes
