#include "nlc/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "nlc/errors.hpp"

namespace nlc {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot payload is little-endian float64; add byte swapping for this platform");

void write_field(std::ofstream& os, const ScalarField& f) {
    os.write(reinterpret_cast<const char*>(f.values.data()),
             static_cast<std::streamsize>(f.values.size() * sizeof(double)));
}

void read_field(std::ifstream& is, ScalarField& f) {
    is.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!is) throw error("snapshot: truncated payload");
}

std::string list_to_string(const int* v, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string list_to_string(const double* v, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ',';
        s += fmt_g17(v[i]);
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) out.push_back(item);
    return out;
}

std::string expect_kv(const std::string& tok, const std::string& key) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw error("snapshot: malformed header token '" + tok + "', expected " + key + "=...");
    return tok.substr(eq + 1);
}

}  // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("snapshot: cannot open " + path + " for writing");
    const Grid& g = snap.grid;
    os << "NLC1 dim=" << g.dim << " sizes=" << list_to_string(g.sizes.data(), g.dim)
       << " length=" << list_to_string(g.length.data(), g.dim) << " time=" << fmt_g17(snap.time)
       << " lambda=" << fmt_g17(snap.lambda) << "\n";
    write_field(os, snap.rho);
    for (int j = 0; j < g.dim; ++j) write_field(os, snap.u.comp[static_cast<std::size_t>(j)]);
    for (int c = 0; c < 3; ++c) write_field(os, snap.n.comp[static_cast<std::size_t>(c)]);
    if (snap.p) write_field(os, *snap.p);
    if (!os) throw error("snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw error("snapshot: cannot open " + path);
    std::string header;
    std::getline(is, header);
    std::vector<std::string> tok = split(header, ' ');
    if (tok.size() != 6 || tok[0] != "NLC1") throw error("snapshot: bad header in " + path);

    int dim = std::stoi(expect_kv(tok[1], "dim"));
    std::vector<std::string> ss = split(expect_kv(tok[2], "sizes"), ',');
    std::vector<std::string> ls = split(expect_kv(tok[3], "length"), ',');
    if (static_cast<int>(ss.size()) != dim || static_cast<int>(ls.size()) != dim)
        throw error("snapshot: header rank mismatch in " + path);
    std::vector<int> sizes;
    std::vector<double> length;
    for (auto& t : ss) sizes.push_back(std::stoi(t));
    for (auto& t : ls) length.push_back(std::stod(t));

    Snapshot snap;
    snap.grid = Grid::make(sizes, length);
    snap.time = std::stod(expect_kv(tok[4], "time"));
    snap.lambda = std::stod(expect_kv(tok[5], "lambda"));
    snap.rho = ScalarField(snap.grid);
    snap.u = VectorField(snap.grid);
    snap.n = Field3(snap.grid);
    read_field(is, snap.rho);
    for (int j = 0; j < dim; ++j) read_field(is, snap.u.comp[static_cast<std::size_t>(j)]);
    for (int c = 0; c < 3; ++c) read_field(is, snap.n.comp[static_cast<std::size_t>(c)]);

    // optional trailing pressure
    std::streampos here = is.tellg();
    is.seekg(0, std::ios::end);
    std::streamoff rest = is.tellg() - here;
    if (rest > 0) {
        if (rest != static_cast<std::streamoff>(snap.grid.cells() * sizeof(double)))
            throw error("snapshot: unexpected trailing bytes in " + path);
        is.seekg(here);
        ScalarField p(snap.grid);
        read_field(is, p);
        snap.p = std::move(p);
    }
    return snap;
}

Snapshot to_snapshot(const CompressibleState& s) {
    Snapshot snap;
    snap.grid = s.grid();
    snap.time = s.time;
    snap.lambda = s.params.lambda;
    snap.rho = s.rho;
    snap.u = s.u;
    snap.n = s.n;
    return snap;
}

Snapshot to_snapshot(const IncompressibleState& s, bool include_pressure) {
    Snapshot snap;
    snap.grid = s.grid();
    snap.time = s.time;
    snap.lambda = s.params.lambda;
    snap.rho = ScalarField(s.grid());
    for (double& v : snap.rho.values) v = 1.0;
    snap.u = s.u;
    snap.n = s.n;
    if (include_pressure) snap.p = s.p;
    return snap;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        auto b = std::find_if(line.begin(), line.end(), notspace);
        if (b == line.end()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: line " + std::to_string(lineno) + " has no '='");
        auto trim = [&](std::string s) {
            auto lo = std::find_if(s.begin(), s.end(), notspace);
            auto hi = std::find_if(s.rbegin(), s.rend(), notspace).base();
            return lo < hi ? std::string(lo, hi) : std::string();
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error("config: empty key on line " + std::to_string(lineno));
        cfg.kv_[key] = val;
        cfg.seen_[key] = false;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

double Config::get_double(const std::string& key, double fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    return std::stod(it->second);
}

long Config::get_long(const std::string& key, long fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    return std::stol(it->second);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    if (it->second == "true" || it->second == "1" || it->second == "on") return true;
    if (it->second == "false" || it->second == "0" || it->second == "off") return false;
    throw config_error("config: bad boolean for " + key + ": " + it->second);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    return it->second;
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        const std::vector<double>& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    std::vector<double> out;
    for (auto& t : split(it->second, ',')) out.push_back(std::stod(t));
    return out;
}

std::vector<int> Config::get_ints(const std::string& key, const std::vector<int>& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    seen_[key] = true;
    std::vector<int> out;
    for (auto& t : split(it->second, ',')) out.push_back(std::stoi(t));
    return out;
}

void Config::check_all_consumed() const {
    for (const auto& [key, seen] : seen_)
        if (!seen) throw config_error("config: unknown key '" + key + "'");
}

}  // namespace nlc
