#include "psc/code_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace psc {

namespace {

constexpr int kFormatVersion = 1;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::map<std::string, std::string> key_values(std::string_view body) {
    std::map<std::string, std::string> kv;
    std::istringstream is{std::string(body)};
    std::string token;
    while (is >> token) {
        const auto eq = token.find('=');
        if (eq != std::string::npos) kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return kv;
}

std::size_t to_size(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw CodeFileError("line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
    }
}

std::string emit_word(const Subspace& s) { return s.dimension() == 0 ? std::string("-") : s.generator().to_string(); }

}  // namespace

std::string emit_code(const SubspaceCode& code) {
    std::ostringstream os;
    os << "# version=" << kFormatVersion << '\n';
    os << "# q=" << code.field().order() << '\n';
    os << "# n=" << code.ambient() << '\n';
    if (const auto k = code.constant_dimension())
        os << "# k=" << *k << '\n';
    else
        os << "# k=mixed\n";
    os << "# d=" << code.claimed_distance() << '\n';
    os << "# size=" << code.size() << '\n';
    for (const auto& f : code.fibers())
        os << "# fiber v=" << f.v.to_string() << " dim=" << f.dimension << " bound=" << f.bound << " size=" << f.size
           << " trial=" << f.trial << " preferred=" << f.preferred << '\n';
    for (const auto& w : code.words()) os << emit_word(w) << '\n';
    return os.str();
}

ParsedCode parse_code(std::string_view text) {
    std::optional<std::size_t> q, n, d, size;
    std::optional<std::size_t> k;
    bool k_seen = false;
    std::vector<FiberInfo> fibers;
    std::vector<std::pair<std::size_t, std::string_view>> bodies;

    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = strip(raw);
        if (line.empty()) continue;
        if (line.front() != '#') {
            bodies.emplace_back(line_no, line);
            continue;
        }
        const auto body = strip(line.substr(1));
        const auto kv = key_values(body);
        if (body.starts_with("fiber ")) {
            FiberInfo f;
            try {
                f.v = BinaryVector::from_string(kv.at("v"));
            } catch (const std::exception&) {
                throw CodeFileError("line " + std::to_string(line_no) + ": bad fiber vector");
            }
            auto field_or_zero = [&](const char* key) {
                const auto it = kv.find(key);
                return it == kv.end() ? std::size_t{0} : to_size(it->second, line_no, key);
            };
            f.dimension = field_or_zero("dim");
            f.bound = field_or_zero("bound");
            f.size = field_or_zero("size");
            f.trial = field_or_zero("trial");
            f.preferred = field_or_zero("preferred");
            fibers.push_back(std::move(f));
            continue;
        }
        for (const auto& [key, value] : kv) {
            if (key == "version") {
                if (to_size(value, line_no, "version") != kFormatVersion)
                    throw CodeFileError("line " + std::to_string(line_no) + ": unsupported format version " + value);
            } else if (key == "q") {
                q = to_size(value, line_no, "q");
            } else if (key == "n") {
                n = to_size(value, line_no, "n");
            } else if (key == "k") {
                k_seen = true;
                if (value != "mixed") k = to_size(value, line_no, "k");
            } else if (key == "d") {
                d = to_size(value, line_no, "d");
            } else if (key == "size") {
                size = to_size(value, line_no, "size");
            }
        }
    }
    if (!q || !n || !k_seen || !d) throw CodeFileError("header must define q, n, k and d");

    Field field = [&] {
        try {
            return Field::of_order(static_cast<std::uint32_t>(*q));
        } catch (const std::exception& e) {
            throw CodeFileError(std::string("header: ") + e.what());
        }
    }();

    ParsedCode out{SubspaceCode(field, *n, *d), {}};
    if (size && *size != bodies.size())
        throw CodeFileError("header size=" + std::to_string(*size) + " but file has " + std::to_string(bodies.size()) +
                            " codewords");

    for (const auto& [where, body] : bodies) {
        const auto at = "line " + std::to_string(where) + ": ";
        std::vector<std::vector<Field::Value>> rows;
        if (body != "-") {
            for (auto row_text : split(body, ';')) {
                if (row_text.size() != *n)
                    throw CodeFileError(at + "row '" + std::string(row_text) + "' does not have n=" + std::to_string(*n) +
                                        " digits");
                std::vector<Field::Value> row;
                for (char c : row_text) {
                    const int v = digit_value(c);
                    if (v < 0 || static_cast<std::size_t>(v) >= *q)
                        throw CodeFileError(at + "digit '" + std::string(1, c) + "' is not in GF(" + std::to_string(*q) + ")");
                    row.push_back(static_cast<Field::Value>(v));
                }
                rows.push_back(std::move(row));
            }
        }
        auto s = Subspace::from_rows(field, *n, rows);
        const auto given = GFMatrix::from_rows(field, *n, rows);
        if (!(given == s.generator())) out.warnings.push_back(at + "rows were not in reduced row echelon form; re-canonicalized");
        if (k && s.dimension() != *k)
            throw CodeFileError(at + "codeword has dimension " + std::to_string(s.dimension()) + ", header says k=" +
                                std::to_string(*k));
        if (!out.code.add(std::move(s))) out.warnings.push_back(at + "duplicate codeword dropped");
    }
    out.code.set_fibers(std::move(fibers));
    return out;
}

std::string emit_skeleton(const SkeletonCode& skeleton) {
    std::string out;
    for (const auto& w : skeleton.words) out += w.to_string() + '\n';
    return out;
}

SkeletonCode parse_skeleton(std::string_view text) {
    SkeletonCode s;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = strip(raw);
        if (line.empty() || line.front() == '#') continue;
        try {
            s.words.push_back(BinaryVector::from_string(line));
        } catch (const std::exception&) {
            throw CodeFileError("skeleton line " + std::to_string(line_no) + ": not a binary word");
        }
    }
    if (s.words.empty()) throw CodeFileError("skeleton file has no words");
    s.length = s.words.front().size();
    s.weight = s.words.front().weight();
    s.min_distance = s.length + 1;
    for (const auto& w : s.words)
        if (w.size() != s.length) throw CodeFileError("skeleton words have different lengths");
    for (std::size_t i = 0; i < s.words.size(); ++i) {
        for (std::size_t j = i + 1; j < s.words.size(); ++j)
            s.min_distance = std::min(s.min_distance, hamming_distance(s.words[i], s.words[j]));
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace psc
