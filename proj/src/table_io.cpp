#include "csd/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "csd/errors.hpp"
#include "csd/formulas.hpp"

namespace csd {

namespace {

// (a+b, a) ascending: the file order of table entries.
std::vector<std::pair<long, long>> entry_keys_sorted(const ExponentTable& table) {
    std::vector<std::pair<long, long>> keys;
    for (const auto& [key, u] : table.entries) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& p, const auto& q) {
        long dp = p.first + p.second, dq = q.first + q.second;
        return dp != dq ? dp < dq : p.first < q.first;
    });
    return keys;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

nlohmann::json table_to_json(const ExponentTable& table) {
    nlohmann::json j;
    j["format_version"] = kTableFormatVersion;
    j["max_degree"] = table.max_degree;
    j["entries"] = nlohmann::json::array();
    for (const auto& key : entry_keys_sorted(table)) {
        const Pbc& u = table.entries.at(key);
        long g = std::gcd(key.first, key.second);
        nlohmann::json entry;
        entry["a"] = key.first;
        entry["b"] = key.second;
        entry["gcd"] = g;
        entry["alpha"] = nlohmann::json::array();
        for (const auto& [idx, c] : u.terms()) { // map order is lexicographic in (i, j)
            Rational scaled = c * g;
            if (!is_integer(scaled))
                throw InvariantError("table_to_json: non-integer gcd-scaled coefficient");
            entry["alpha"].push_back({idx.first, idx.second,
                                      to_int(scaled).convert_to<long long>()});
        }
        j["entries"].push_back(std::move(entry));
    }
    return j;
}

ExponentTable table_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("format_version") || !j.contains("max_degree") ||
            !j.contains("entries"))
            throw CacheCorruptError("table file: missing required fields");
        if (j.at("format_version").get<int>() != kTableFormatVersion)
            throw CacheCorruptError("table file: unsupported format_version");
        ExponentTable table;
        table.max_degree = j.at("max_degree").get<int>();
        if (table.max_degree < 2) throw CacheCorruptError("table file: max_degree below 2");
        for (const auto& entry : j.at("entries")) {
            long a = entry.at("a").get<long>();
            long b = entry.at("b").get<long>();
            long g = entry.at("gcd").get<long>();
            Vec v{a, b};
            if (!v.in_nplus() || v.degree() > table.max_degree || g != std::gcd(a, b))
                throw CacheCorruptError("table file: invalid entry (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
            Pbc u;
            for (const auto& triple : entry.at("alpha")) {
                if (!triple.is_array() || triple.size() != 3)
                    throw CacheCorruptError("table file: malformed alpha triple");
                long i = triple[0].get<long>(), jj = triple[1].get<long>();
                long long c = triple[2].get<long long>();
                u.set_coeff(i, jj, u.coeff(i, jj) + Rational(c, g));
            }
            if (table.entries.count({a, b}))
                throw CacheCorruptError("table file: duplicate entry");
            table.entries[{a, b}] = std::move(u);
        }
        for (const Vec& seed : {Vec{1, 0}, Vec{0, 1}})
            if (!table.contains(seed)) throw CacheCorruptError("table file: missing initial wall");
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorruptError(std::string("table file: ") + e.what());
    }
}

std::string table_to_csv(const ExponentTable& table) {
    std::ostringstream os;
    os << "a,b,i,j,alpha,gcd\n";
    for (const auto& key : entry_keys_sorted(table)) {
        const Pbc& u = table.entries.at(key);
        long g = std::gcd(key.first, key.second);
        for (const auto& [idx, c] : u.terms()) {
            Rational scaled = c * g;
            if (!is_integer(scaled))
                throw InvariantError("table_to_csv: non-integer gcd-scaled coefficient");
            os << key.first << "," << key.second << "," << idx.first << "," << idx.second << ","
               << to_int(scaled) << "," << g << "\n";
        }
    }
    return os.str();
}

namespace {

std::string binom_tex(const char* var, long k) {
    if (k == 0) return "";
    if (k == 1) return std::string(var);
    return std::string("\\binom{") + var + "}{" + std::to_string(k) + "}";
}

std::string exponent_tex(const Pbc& u) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : u.terms()) {
        std::string body = binom_tex("m", idx.first) + binom_tex("n", idx.second);
        if (!first) os << "+";
        first = false;
        if (c != 1 || body.empty()) {
            if (is_integer(c))
                os << to_int(c);
            else
                os << "\\tfrac{" << boost::multiprecision::numerator(c) << "}{"
                   << boost::multiprecision::denominator(c) << "}";
        }
        os << body;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string table_to_latex(const ExponentTable& table) {
    // One factor per line, smallest first, mirroring the ordered product.
    std::ostringstream os;
    for (const Factor& f : table_to_factor_list(table))
        os << "\\Psi[(" << f.vector.a << "," << f.vector.b << ")]^{" << exponent_tex(f.exponent)
           << "}\n";
    return os.str();
}

ExponentTable truncate_table(const ExponentTable& table, int max_degree) {
    if (max_degree < 2 || max_degree > table.max_degree)
        throw PreconditionError("truncate_table: degree out of range");
    ExponentTable out;
    out.max_degree = max_degree;
    for (const auto& [key, u] : table.entries)
        if (key.first + key.second <= max_degree) out.entries[key] = u;
    return out;
}

std::vector<WallRecord> eval_walls(const ExponentTable& table, long delta1, long delta2) {
    if (delta1 < 0 || delta2 < 0)
        throw PreconditionError("eval_walls: (delta1, delta2) must be nonnegative");
    std::vector<WallRecord> out;
    for (const Factor& f : table_to_factor_list(table)) {
        Rational value = f.exponent.eval(delta1, delta2);
        if (value == 0) continue;
        const Vec v = f.vector;
        bool incoming = (v == Vec{1, 0}) || (v == Vec{0, 1});
        out.push_back({v, {delta2 * v.b, -delta1 * v.a}, value, incoming});
    }
    return out;
}

nlohmann::json walls_to_json(const std::vector<WallRecord>& walls) {
    nlohmann::json arr = nlohmann::json::array();
    for (const WallRecord& w : walls) {
        nlohmann::json rec;
        rec["a"] = w.vector.a;
        rec["b"] = w.vector.b;
        rec["ray"] = {w.ray.first, w.ray.second};
        rec["exponent"] = rational_str(w.exponent);
        rec["incoming"] = w.incoming;
        arr.push_back(std::move(rec));
    }
    return arr;
}

std::string walls_to_csv(const std::vector<WallRecord>& walls) {
    std::ostringstream os;
    os << "a,b,ray_x,ray_y,exponent,incoming\n";
    for (const WallRecord& w : walls)
        os << w.vector.a << "," << w.vector.b << "," << w.ray.first << "," << w.ray.second << ","
           << rational_str(w.exponent) << "," << (w.incoming ? 1 : 0) << "\n";
    return os.str();
}

namespace {

double ray_angle(const std::pair<long, long>& ray) {
    return std::atan2((double)ray.second, (double)ray.first);
}

} // namespace

nlohmann::json plot_data_json(const std::vector<WallRecord>& walls, long delta1, long delta2) {
    std::vector<WallRecord> sorted = walls;
    // Clockwise: decreasing angle.
    std::stable_sort(sorted.begin(), sorted.end(), [](const WallRecord& x, const WallRecord& y) {
        return ray_angle(x.ray) > ray_angle(y.ray);
    });
    nlohmann::json j;
    j["delta"] = {delta1, delta2};
    j["rays"] = nlohmann::json::array();
    for (const WallRecord& w : sorted) {
        nlohmann::json rec;
        rec["ray"] = {w.ray.first, w.ray.second};
        rec["angle"] = ray_angle(w.ray);
        rec["exponent"] = rational_str(w.exponent);
        rec["incoming"] = w.incoming;
        j["rays"].push_back(std::move(rec));
    }
    // Badlands band: the cone between the rays of the walls (delta1, 1) and
    // (1, delta2); nonempty exactly when delta1 * delta2 >= 5.
    j["badlands_band"] = {
        {"from_ray", {delta2 * 1, -delta1 * delta1}},
        {"to_ray", {delta2 * delta2, -delta1 * 1}},
        {"nonempty", delta1 * delta2 >= 5},
    };
    return j;
}

std::string plot_data_csv(const std::vector<WallRecord>& walls) {
    std::vector<WallRecord> sorted = walls;
    std::stable_sort(sorted.begin(), sorted.end(), [](const WallRecord& x, const WallRecord& y) {
        return ray_angle(x.ray) > ray_angle(y.ray);
    });
    std::ostringstream os;
    os << "ray_x,ray_y,angle,exponent,incoming\n";
    for (const WallRecord& w : sorted)
        os << w.ray.first << "," << w.ray.second << "," << ray_angle(w.ray) << ","
           << rational_str(w.exponent) << "," << (w.incoming ? 1 : 0) << "\n";
    return os.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("atomic_write: cannot open " + tmp.string());
        out << content;
        if (!out.flush()) throw Error("atomic_write: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void save_table(const ExponentTable& table, const std::filesystem::path& path) {
    atomic_write(path, table_to_json(table).dump(2) + "\n");
}

ExponentTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheCorruptError("cannot open table file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorruptError(std::string("table file parse error: ") + e.what());
    }
    return table_from_json(j);
}

} // namespace csd
