#include "membrane/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "membrane/errors.hpp"

namespace membrane {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw CsvFormatError(std::string("bad ") + what + " field: '" + s + "'");
    return v;
}

struct Row {
    std::vector<std::string> fields;
};

std::vector<Row> read_rows(std::istream& is, const std::string& header,
                           std::size_t n_fields) {
    std::string line;
    if (!std::getline(is, line)) throw CsvFormatError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw CsvFormatError("expected header '" + header + "', got '" + line + "'");
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Row r{split(line)};
        if (r.fields.size() != n_fields)
            throw CsvFormatError("expected " + std::to_string(n_fields) + " fields, got '" +
                                 line + "'");
        rows.push_back(std::move(r));
    }
    if (rows.size() < 5) throw CsvFormatError("too few CSV rows");
    return rows;
}

Grid grid_from_nodes(const std::vector<double>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 3 || n % 2 == 0) throw CsvFormatError("node count must be odd and >= 3");
    const double bound = xs.back();
    if (!(bound > 0.0)) throw CsvFormatError("grid bound must be positive");
    Grid g(bound, n);
    for (int k = 0; k < n; ++k)
        if (std::abs(xs[static_cast<std::size_t>(k)] - g.node(k)) >
            1e-9 * std::max(1.0, std::abs(bound)))
            throw CsvFormatError("nodes are not a uniform symmetric grid");
    return g;
}

}  // namespace

void write_line_csv(std::ostream& os, const LineFunction& f) {
    os << "x,value\n";
    os << "-inf," << fmt(f.limit_neg) << "\n";
    for (int k = 0; k < f.grid.n_points(); ++k)
        os << fmt(f.grid.node(k)) << "," << fmt(f.samples[static_cast<std::size_t>(k)]) << "\n";
    os << "+inf," << fmt(f.limit_pos) << "\n";
}

void write_sharp_csv(std::ostream& os, const SharpFunction& f) {
    os << "x,side,value\n";
    os << "-inf,L," << fmt(f.limit_neg) << "\n";
    const int m = f.grid.half_size();
    for (int i = 0; i < m; ++i)
        os << fmt(f.grid.node(i)) << ",L," << fmt(f.left[static_cast<std::size_t>(i)]) << "\n";
    for (int i = 0; i < m; ++i)
        os << fmt(f.grid.node(f.grid.center_index() + i)) << ",R,"
           << fmt(f.right[static_cast<std::size_t>(i)]) << "\n";
    os << "+inf,R," << fmt(f.limit_pos) << "\n";
}

void write_pair_csv(std::ostream& os, const FunctionPair& p) {
    os << "x,f1,f2\n";
    os << "-inf," << fmt(p.first.limit_neg) << "," << fmt(p.second.limit_neg) << "\n";
    for (int k = 0; k < p.first.grid.n_points(); ++k)
        os << fmt(p.first.grid.node(k)) << "," << fmt(p.first.samples[static_cast<std::size_t>(k)])
           << "," << fmt(p.second.samples[static_cast<std::size_t>(k)]) << "\n";
    os << "+inf," << fmt(p.first.limit_pos) << "," << fmt(p.second.limit_pos) << "\n";
}

void write_ladder_csv(std::ostream& os, const LadderReport& rep) {
    os << "n,error\n";
    for (std::size_t i = 0; i < rep.ladder.size(); ++i)
        os << rep.ladder[i] << "," << fmt(rep.errors[i]) << "\n";
}

LineFunction read_line_csv(std::istream& is) {
    const auto rows = read_rows(is, "x,value", 2);
    if (rows.front().fields[0] != "-inf" || rows.back().fields[0] != "+inf")
        throw CsvFormatError("line CSV must open with -inf and close with +inf rows");
    const double limit_neg = parse_double(rows.front().fields[1], "limit");
    const double limit_pos = parse_double(rows.back().fields[1], "limit");
    std::vector<double> xs, vs;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        xs.push_back(parse_double(rows[i].fields[0], "x"));
        vs.push_back(parse_double(rows[i].fields[1], "value"));
    }
    Grid g = grid_from_nodes(xs);
    return LineFunction{g, std::move(vs), limit_neg, limit_pos};
}

SharpFunction read_sharp_csv(std::istream& is) {
    const auto rows = read_rows(is, "x,side,value", 3);
    double limit_neg = 0.0, limit_pos = 0.0;
    bool saw_neg = false, saw_pos = false;
    std::vector<double> lx, lv, rx, rv;
    for (const auto& r : rows) {
        const std::string& xs = r.fields[0];
        const std::string& side = r.fields[1];
        const double v = parse_double(r.fields[2], "value");
        if (xs == "-inf") {
            limit_neg = v;
            saw_neg = true;
            continue;
        }
        if (xs == "+inf") {
            limit_pos = v;
            saw_pos = true;
            continue;
        }
        const double x = parse_double(xs, "x");
        if (side == "L") {
            lx.push_back(x);
            lv.push_back(v);
        } else if (side == "R") {
            rx.push_back(x);
            rv.push_back(v);
        } else {
            throw CsvFormatError("side must be L or R, got '" + side + "'");
        }
    }
    if (!saw_neg || !saw_pos) throw CsvFormatError("sharp CSV must carry -inf and +inf rows");
    if (lx.size() != rx.size() || lx.size() < 2)
        throw CsvFormatError("sharp CSV branches must have equal node counts");
    std::vector<double> xs_all(lx);
    xs_all.insert(xs_all.end(), rx.begin() + 1, rx.end());
    Grid g = grid_from_nodes(xs_all);
    SharpFunction out{g, std::move(lv), std::move(rv), limit_neg, limit_pos};
    if (static_cast<int>(out.left.size()) != g.half_size())
        throw CsvFormatError("sharp CSV branch length does not match the grid");
    return out;
}

FunctionPair read_pair_csv(std::istream& is) {
    const auto rows = read_rows(is, "x,f1,f2", 3);
    if (rows.front().fields[0] != "-inf" || rows.back().fields[0] != "+inf")
        throw CsvFormatError("pair CSV must open with -inf and close with +inf rows");
    std::vector<double> xs, v1, v2;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        xs.push_back(parse_double(rows[i].fields[0], "x"));
        v1.push_back(parse_double(rows[i].fields[1], "f1"));
        v2.push_back(parse_double(rows[i].fields[2], "f2"));
    }
    Grid g = grid_from_nodes(xs);
    LineFunction f1{g, std::move(v1), parse_double(rows.front().fields[1], "limit"),
                    parse_double(rows.back().fields[1], "limit")};
    LineFunction f2{g, std::move(v2), parse_double(rows.front().fields[2], "limit"),
                    parse_double(rows.back().fields[2], "limit")};
    return {std::move(f1), std::move(f2)};
}

namespace {

template <class F>
void write_file(const std::string& path, F&& writer) {
    std::ofstream os(path);
    if (!os) throw MembraneError("cannot open for writing: " + path);
    writer(os);
}

template <class T, class F>
T read_file(const std::string& path, F&& reader) {
    std::ifstream is(path);
    if (!is) throw MembraneError("cannot open for reading: " + path);
    return reader(is);
}

}  // namespace

void write_line_csv_file(const std::string& path, const LineFunction& f) {
    write_file(path, [&](std::ostream& os) { write_line_csv(os, f); });
}
void write_sharp_csv_file(const std::string& path, const SharpFunction& f) {
    write_file(path, [&](std::ostream& os) { write_sharp_csv(os, f); });
}
void write_pair_csv_file(const std::string& path, const FunctionPair& p) {
    write_file(path, [&](std::ostream& os) { write_pair_csv(os, p); });
}
void write_ladder_csv_file(const std::string& path, const LadderReport& rep) {
    write_file(path, [&](std::ostream& os) { write_ladder_csv(os, rep); });
}

LineFunction read_line_csv_file(const std::string& path) {
    return read_file<LineFunction>(path, [](std::istream& is) { return read_line_csv(is); });
}
SharpFunction read_sharp_csv_file(const std::string& path) {
    return read_file<SharpFunction>(path, [](std::istream& is) { return read_sharp_csv(is); });
}
FunctionPair read_pair_csv_file(const std::string& path) {
    return read_file<FunctionPair>(path, [](std::istream& is) { return read_pair_csv(is); });
}

}  // namespace membrane
