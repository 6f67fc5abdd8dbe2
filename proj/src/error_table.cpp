#include "atdm/error_table.hpp"

#include "atdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace atdm {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // avoid "-0.0000000000"
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

std::string format_log10(double log10_value, int mantissa_decimals) {
    if (std::isinf(log10_value) && log10_value < 0) return "0";
    double e = std::floor(log10_value);
    double m = std::pow(10.0, log10_value - e);
    // rounding may push the mantissa to 10.000
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", mantissa_decimals, m);
    if (std::string(buf).rfind("10", 0) == 0) {
        e += 1;
        m /= 10.0;
        std::snprintf(buf, sizeof buf, "%.*f", mantissa_decimals, m);
    }
    std::string s(buf);
    s += "e";
    s += (e < 0 ? "-" : "+");
    char eb[32];
    std::snprintf(eb, sizeof eb, "%.0f", std::abs(e));
    s += eb;
    return s;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Parse "m.mmm e±EEE" into log10; exponent may exceed double range.
double parse_log10(const std::string& s) {
    if (s == "0") return -std::numeric_limits<double>::infinity();
    const auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) return std::log10(std::stod(s));
    const double mant = std::stod(s.substr(0, epos));
    const double ex = std::stod(s.substr(epos + 1));
    return ex + std::log10(mant);
}

}  // namespace

std::string ErrorTable::to_csv() const {
    std::ostringstream os;
    os << "# benchmark=" << meta.benchmark << " table=" << meta.table_id
       << " n_components=" << meta.n_components << " x=" << format_fixed(meta.x, 4)
       << " grid=" << meta.grid << "\n";

    if (!l2_rows.empty()) {
        // one column per j, one row per t
        std::vector<int> js;
        for (const auto& r : l2_rows)
            if (std::find(js.begin(), js.end(), r.j) == js.end()) js.push_back(r.j);
        std::sort(js.begin(), js.end());
        os << "t";
        for (int j : js) os << ",l2_j" << j;
        os << "\n";
        std::vector<double> ts;
        for (const auto& r : l2_rows)
            if (std::find(ts.begin(), ts.end(), r.t) == ts.end()) ts.push_back(r.t);
        std::sort(ts.begin(), ts.end());
        for (double t : ts) {
            os << format_fixed(t, 2);
            for (int j : js) {
                for (const auto& r : l2_rows) {
                    if (r.t == t && r.j == j) {
                        os << "," << format_log10(r.log10_value);
                        break;
                    }
                }
            }
            os << "\n";
        }
        return os.str();
    }

    // group point rows by (variable, x, t); one AE column per beta
    std::vector<double> betas;
    for (const auto& r : rows)
        if (std::find(betas.begin(), betas.end(), r.beta) == betas.end()) betas.push_back(r.beta);
    std::sort(betas.begin(), betas.end());

    const bool with_reference = !rows.empty() && rows.front().reference.has_value();
    const bool vary_x = [&] {
        for (const auto& r : rows)
            if (r.x != rows.front().x) return true;
        return false;
    }();

    os << "variable," << (vary_x ? "x" : "t") << ",exact,approximate";
    for (double b : betas) {
        os << ",ae_b" << format_fixed(b, 2);
        if (with_reference) os << ",reference_ae_b" << format_fixed(b, 2);
    }
    os << "\n";

    struct Key {
        char var;
        double x, t;
        bool operator<(const Key& o) const {
            if (var != o.var) return var < o.var;
            if (x != o.x) return x < o.x;
            return t < o.t;
        }
    };
    std::map<Key, std::vector<const PointRow*>> groups;
    for (const auto& r : rows) groups[{r.variable, r.x, r.t}].push_back(&r);
    for (const auto& [key, group] : groups) {
        const PointRow* at_one = group.front();
        for (const auto* r : group)
            if (r->beta == 1.0) at_one = r;
        os << key.var << "," << format_fixed(vary_x ? key.x : key.t, 2) << ","
           << format_fixed(at_one->exact) << "," << format_fixed(at_one->approx);
        for (double b : betas) {
            const PointRow* match = nullptr;
            for (const auto* r : group)
                if (r->beta == b) match = r;
            os << "," << (match ? format_fixed(match->abs_error) : "");
            if (with_reference)
                os << "," << (match && match->reference ? format_fixed(*match->reference) : "");
        }
        os << "\n";
    }
    return os.str();
}

ErrorTable ErrorTable::from_csv(const std::string& text) {
    ErrorTable table;
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> header;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        auto fields = split(line, ',');
        if (header.empty()) {
            header = fields;
            continue;
        }
        if (header.front() == "t" && header.size() > 1 && header[1].rfind("l2_j", 0) == 0) {
            L2Row row;
            row.t = std::stod(fields[0]);
            for (std::size_t i = 1; i < header.size(); ++i) {
                row.j = std::stoi(header[i].substr(4));
                row.log10_value = parse_log10(fields[i]);
                row.log10_norm = 2 * row.log10_value;
                table.l2_rows.push_back(row);
            }
            continue;
        }
        // wide point format
        const bool vary_x = header[1] == "x";
        for (std::size_t i = 4; i < header.size(); ++i) {
            const std::string& h = header[i];
            bool is_ref = h.rfind("reference_ae_b", 0) == 0;
            bool is_ae = h.rfind("ae_b", 0) == 0;
            if (!is_ref && !is_ae) throw ParseError("table csv: unexpected column " + h);
            if (is_ref) continue;  // folded into its ae column below
            PointRow row;
            row.variable = fields[0][0];
            (vary_x ? row.x : row.t) = std::stod(fields[1]);
            row.exact = std::stod(fields[2]);
            row.approx = std::stod(fields[3]);
            row.beta = std::stod(h.substr(4));
            if (!fields[i].empty()) row.abs_error = std::stod(fields[i]);
            if (i + 1 < header.size() && header[i + 1].rfind("reference_ae_b", 0) == 0 &&
                !fields[i + 1].empty())
                row.reference = std::stod(fields[i + 1]);
            table.rows.push_back(row);
        }
    }
    return table;
}

namespace {

void json_escape(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}

}  // namespace

std::string ErrorTable::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"meta\":{\"benchmark\":";
    json_escape(os, meta.benchmark);
    os << ",\"table\":";
    json_escape(os, meta.table_id);
    os << ",\"n_components\":" << meta.n_components << ",\"x\":" << meta.x << ",\"grid\":";
    json_escape(os, meta.grid);
    os << ",\"spec_hash\":";
    json_escape(os, meta.spec_hash);
    os << "},\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) os << ",";
        os << "{\"variable\":\"" << r.variable << "\",\"x\":" << r.x << ",\"t\":" << r.t
           << ",\"beta\":" << r.beta << ",\"exact\":" << r.exact << ",\"approx\":" << r.approx
           << ",\"abs_error\":" << r.abs_error;
        if (r.reference) os << ",\"reference\":" << *r.reference;
        os << "}";
    }
    os << "],\"l2_rows\":[";
    for (std::size_t i = 0; i < l2_rows.size(); ++i) {
        const auto& r = l2_rows[i];
        if (i) os << ",";
        os << "{\"t\":" << r.t << ",\"j\":" << r.j << ",\"log10_norm\":" << r.log10_norm
           << ",\"log10_value\":" << r.log10_value << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace atdm
