#include "rabiwave/config.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "rabiwave/csv.hpp"

namespace rabiwave {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double out = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError(key, "not a number: '" + v + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    const int i = static_cast<int>(d);
    if (d != i) throw ConfigError(key, "not an integer: '" + v + "'");
    return i;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
    return out;
}

// `re`, `imi`, `re+imi`, `re-imi`; a bare `i` counts as 1i
std::complex<double> parse_complex(const std::string& key, const std::string& v) {
    std::string s = trim(v);
    if (s.empty()) throw ConfigError(key, "empty complex entry");
    if (s.back() == 'i') {
        s.pop_back();
        // find the sign that splits real and imaginary parts (skip leading sign
        // and exponent signs)
        size_t split = std::string::npos;
        for (size_t i = 1; i < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') &&
                s[i - 1] != 'e' && s[i - 1] != 'E')
                split = i;
        }
        if (split == std::string::npos) {
            const std::string im = s.empty() || s == "+" || s == "-" ? s + "1" : s;
            return {0.0, parse_double(key, im)};
        }
        std::string im = s.substr(split);
        if (im == "+" || im == "-") im += "1";
        return {parse_double(key, s.substr(0, split)), parse_double(key, im)};
    }
    return {parse_double(key, s), 0.0};
}

}  // namespace

SystemParams parse_config(const std::string& text) {
    SystemParams p;
    std::map<std::string, int> seen;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(lineno) +
                                      ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (seen[key]++)
            throw ConfigError(key, "duplicate key");

        if (key == "n_chains") p.n_chains = parse_int(key, value);
        else if (key == "n_sites") p.n_sites = parse_int(key, value);
        else if (key == "site_spacing") p.site_spacing = parse_double(key, value);
        else if (key == "omega0") p.omega0 = parse_double(key, value);
        else if (key == "omega") p.omega = parse_double(key, value);
        else if (key == "g") p.g = parse_double(key, value);
        else if (key == "wavenumber") p.wavenumber = parse_double(key, value);
        else if (key == "xi1") p.xi1 = parse_real_list(key, value);
        else if (key == "xi2") p.xi2 = parse_real_list(key, value);
        else if (key == "lambda") p.lambda = parse_double(key, value);
        else if (key == "mean_photons") p.mean_photons = parse_double(key, value);
        else if (key == "l_max") {
            if (value == "auto") p.l_max.reset();
            else p.l_max = parse_int(key, value);
        }
        else if (key == "sigma") p.sigma = parse_double(key, value);
        else if (key == "x0") p.x0 = parse_double(key, value);
        else if (key == "dt") p.dt = parse_double(key, value);
        else if (key == "t_end") p.t_end = parse_double(key, value);
        else if (key == "sample_stride") p.sample_stride = parse_int(key, value);
        else if (key == "h_max") p.h_max = parse_double(key, value);
        else if (key == "h_step") p.h_step = parse_double(key, value);
        else if (key == "chain_profile") {
            p.chain_profile.clear();
            for (const auto& item : split_list(value))
                p.chain_profile.push_back(parse_complex(key, item));
        }
        else throw ConfigError(key, "unknown key");
    }
    p.validate();
    return p;
}

std::string serialize_config(const SystemParams& p) {
    std::ostringstream os;
    auto num = [](double v) { return format_number(v); };
    os << "n_chains = " << p.n_chains << '\n'
       << "n_sites = " << p.n_sites << '\n'
       << "site_spacing = " << num(p.site_spacing) << '\n'
       << "omega0 = " << num(p.omega0) << '\n'
       << "omega = " << num(p.omega) << '\n'
       << "g = " << num(p.g) << '\n'
       << "wavenumber = " << num(p.wavenumber) << '\n';
    auto list = [&](const char* key, const std::vector<double>& xs) {
        os << key << " = ";
        for (size_t i = 0; i < xs.size(); ++i)
            os << (i ? "," : "") << num(xs[i]);
        os << '\n';
    };
    list("xi1", p.xi1);
    list("xi2", p.xi2);
    os << "lambda = " << num(p.lambda) << '\n'
       << "mean_photons = " << num(p.mean_photons) << '\n'
       << "l_max = " << (p.l_max ? std::to_string(*p.l_max) : "auto") << '\n'
       << "sigma = " << num(p.sigma) << '\n'
       << "x0 = " << num(p.x0) << '\n'
       << "dt = " << num(p.dt) << '\n'
       << "t_end = " << num(p.t_end) << '\n'
       << "sample_stride = " << p.sample_stride << '\n';
    if (p.h_max) os << "h_max = " << num(*p.h_max) << '\n';
    if (p.h_step) os << "h_step = " << num(*p.h_step) << '\n';
    if (!p.chain_profile.empty()) {
        os << "chain_profile = ";
        for (size_t i = 0; i < p.chain_profile.size(); ++i) {
            const auto& u = p.chain_profile[i];
            os << (i ? "," : "") << num(u.real());
            if (u.imag() != 0.0)
                os << (u.imag() > 0 ? "+" : "") << num(u.imag()) << 'i';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rabiwave
