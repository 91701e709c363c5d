#include "ridgenet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ridgenet/phantom.hpp"

namespace ridgenet {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream os(path, mode);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    return os;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream is(path, mode);
    if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
    return is;
}

void finish(std::ostream& os, const std::filesystem::path& path) {
    os.flush();
    if (!os) throw IoError("write to '" + path.string() + "' failed");
}

double parse_double(const std::string& tok, const std::filesystem::path& path, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

// numeric rows of a CSV with a header line
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path, std::size_t columns) {
    auto is = open_in(path);
    std::string line;
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 0;
    bool header = true;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto toks = split(line, ',');
        if (toks.size() != columns)
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                          " columns");
        std::vector<double> row;
        for (const auto& t : toks) row.push_back(parse_double(t, path, lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("'" + path.string() + "' holds no data rows");
    return rows;
}

Grid1D infer_grid(const std::vector<double>& pts, const std::filesystem::path& path) {
    if (pts.size() == 1) return Grid1D(pts[0], 1.0, 1);
    const double step = (pts.back() - pts.front()) / static_cast<double>(pts.size() - 1);
    if (!(step > 0.0)) throw IoError("'" + path.string() + "': coordinates are not increasing");
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (std::abs(pts[i] - (pts.front() + static_cast<double>(i) * step)) > 1e-6 * step)
            throw IoError("'" + path.string() + "': coordinates are not uniformly spaced");
    return Grid1D(pts.front(), step, pts.size());
}

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s) {
    auto os = open_out(path);
    os << "x,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) os << format_double(s.grid()[i]) << ',' << format_double(s[i]) << '\n';
    finish(os, path);
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
    const auto rows = read_numeric_csv(path, 2);
    std::vector<double> x, v;
    for (const auto& r : rows) {
        x.push_back(r[0]);
        v.push_back(r[1]);
    }
    return SampledSignal(infer_grid(x, path), std::move(v));
}

void write_image_csv(const std::filesystem::path& path, const SampledImage& img) {
    auto os = open_out(path);
    os << "x,y,value\n";
    for (std::size_t iy = 0; iy < img.ny(); ++iy)
        for (std::size_t ix = 0; ix < img.nx(); ++ix)
            os << format_double(img.grid_x()[ix]) << ',' << format_double(img.grid_y()[iy]) << ','
               << format_double(img.at(ix, iy)) << '\n';
    finish(os, path);
}

SampledImage read_image_csv(const std::filesystem::path& path) {
    const auto rows = read_numeric_csv(path, 3);
    std::size_t nx = 1;
    while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
    if (rows.size() % nx) throw IoError("'" + path.string() + "': rows do not form a full grid");
    const std::size_t ny = rows.size() / nx;
    std::vector<double> xs, ys, v;
    for (std::size_t i = 0; i < nx; ++i) xs.push_back(rows[i][0]);
    for (std::size_t j = 0; j < ny; ++j) ys.push_back(rows[j * nx][1]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k][0] != xs[k % nx] || rows[k][1] != ys[k / nx])
            throw IoError("'" + path.string() + "': rows are not in x-fastest grid order");
        v.push_back(rows[k][2]);
    }
    return SampledImage(infer_grid(xs, path), infer_grid(ys, path), std::move(v));
}

void write_pgm(const std::filesystem::path& path, std::span<const double> values, std::size_t width,
               std::size_t height) {
    if (values.size() != width * height) throw std::invalid_argument("PGM size mismatch");
    double lo = 0.0, hi = 0.0;
    if (!values.empty()) {
        const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        lo = *mn;
        hi = *mx;
    }
    std::vector<unsigned char> bytes(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double t = hi > lo ? (values[i] - lo) / (hi - lo) : 0.0;
        bytes[i] = static_cast<unsigned char>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
    }
    auto os = open_out(path, std::ios::out | std::ios::binary);
    os << "P5\n" << width << ' ' << height << "\n255\n";
    // first row of the file is the top of the image (largest y)
    for (std::size_t r = height; r-- > 0;)
        os.write(reinterpret_cast<const char*>(bytes.data() + r * width), static_cast<std::streamsize>(width));
    finish(os, path);
}

void write_pgm(const std::filesystem::path& path, const SampledImage& img) {
    write_pgm(path, img.values(), img.nx(), img.ny());
}

SampledImage read_pgm(const std::filesystem::path& path) {
    auto is = open_in(path, std::ios::in | std::ios::binary);
    auto token = [&] {
        std::string t;
        while (is >> std::ws && is.peek() == '#') {
            std::string comment;
            std::getline(is, comment);
        }
        if (!(is >> t)) throw IoError("'" + path.string() + "': truncated PGM header");
        return t;
    };
    if (token() != "P5") throw IoError("'" + path.string() + "': not a binary PGM (P5)");
    std::size_t w = 0, h = 0, maxval = 0;
    try {
        w = std::stoul(token());
        h = std::stoul(token());
        maxval = std::stoul(token());
    } catch (const std::exception&) {
        throw IoError("'" + path.string() + "': bad PGM header");
    }
    if (w == 0 || h == 0 || w != h || maxval == 0 || maxval > 255)
        throw IoError("'" + path.string() + "': need a square 8-bit PGM");
    is.get();
    std::vector<unsigned char> bytes(w * h);
    if (!is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())))
        throw IoError("'" + path.string() + "': truncated PGM data");
    const Grid1D axis = unit_square_axis(w);
    SampledImage img(axis, axis);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c)
            img.at(c, h - 1 - r) = static_cast<double>(bytes[r * w + c]) / static_cast<double>(maxval);
    return img;
}

void write_coefficients_csv(const std::filesystem::path& path, const RidgeletCoefficients& T) {
    const ParamGrid& g = T.grid();
    auto os = open_out(path);
    if (g.dim() == 1) os << "a,b,re,im\n";
    else {
        for (std::size_t d = 0; d < g.dim(); ++d) os << 'a' << d + 1 << ',';
        os << "b,re,im\n";
    }
    std::vector<double> a(g.dim());
    for (std::size_t i = 0; i < g.a_count(); ++i) {
        g.a_point(i, a);
        std::string prefix;
        for (double v : a) prefix += format_double(v) + ',';
        for (std::size_t j = 0; j < g.b_axis().size(); ++j) {
            const cplx& c = T.at(i, j);
            os << prefix << format_double(g.b_axis()[j]) << ',' << format_double(c.real()) << ','
               << format_double(c.imag()) << '\n';
        }
    }
    finish(os, path);
}

void write_sinogram_csv(const std::filesystem::path& path, const Sinogram& s) {
    auto os = open_out(path);
    os << "angle,offset,value\n";
    for (std::size_t a = 0; a < s.angles.size(); ++a)
        for (std::size_t p = 0; p < s.offsets.size(); ++p)
            os << format_double(s.angles[a]) << ',' << format_double(s.offsets[p]) << ','
               << format_double(s.at(a, p)) << '\n';
    finish(os, path);
}

void write_network(const std::filesystem::path& path, const NetworkDescription& net) {
    net.validate();
    auto os = open_out(path);
    os << "ridgenet-v1 m=" << net.m << " eta=" << net.eta.name() << " K=" << format_double(net.K.real()) << ','
       << format_double(net.K.imag());
    if (net.eta.kind == ActivationKind::DiracDelta || net.eta.kind == ActivationKind::DiracDerivApprox)
        os << " width=" << format_double(net.eta.width);
    os << '\n';
    const auto m = static_cast<std::size_t>(net.m);
    for (std::size_t j = 0; j < net.size(); ++j) {
        for (std::size_t d = 0; d < m; ++d) os << format_double(net.a[j * m + d]) << ' ';
        os << format_double(net.b[j]) << ' ' << format_double(net.c[j].real()) << ' '
           << format_double(net.c[j].imag()) << '\n';
    }
    finish(os, path);
}

NetworkDescription read_network(const std::filesystem::path& path) {
    auto is = open_in(path);
    std::string header;
    if (!std::getline(is, header)) throw IoError("'" + path.string() + "': empty network file");
    std::istringstream hs(header);
    std::string magic;
    hs >> magic;
    if (magic != "ridgenet-v1") throw IoError("'" + path.string() + "': not a ridgenet-v1 network file");
    std::map<std::string, std::string> kv;
    for (std::string tok; hs >> tok;) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw IoError("'" + path.string() + "': malformed header field '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"m", "eta", "K"})
        if (!kv.count(key)) throw IoError("'" + path.string() + "': header lacks '" + key + "'");
    NetworkDescription net;
    try {
        net.m = std::stoi(kv["m"]);
        const double width = kv.count("width") ? parse_double(kv["width"], path, 1) : 0.1;
        net.eta = parse_activation(kv["eta"], width);
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError("'" + path.string() + "': " + e.what());
    }
    const auto kparts = split(kv["K"], ',');
    if (kparts.size() != 2) throw IoError("'" + path.string() + "': K must be <re>,<im>");
    net.K = {parse_double(kparts[0], path, 1), parse_double(kparts[1], path, 1)};
    if (net.m < 1 || net.m > 2) throw IoError("'" + path.string() + "': unsupported input dimension");

    std::string line;
    std::size_t lineno = 1;
    std::vector<double> a(static_cast<std::size_t>(net.m));
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.size() != a.size() + 3)
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                          std::to_string(a.size() + 3) + " fields");
        for (std::size_t d = 0; d < a.size(); ++d) a[d] = parse_double(toks[d], path, lineno);
        net.add_unit(a, parse_double(toks[a.size()], path, lineno),
                     {parse_double(toks[a.size() + 1], path, lineno), parse_double(toks[a.size() + 2], path, lineno)});
    }
    try {
        net.validate();
    } catch (const std::invalid_argument& e) {
        throw IoError("'" + path.string() + "': " + e.what());
    }
    return net;
}

std::string metrics_json(const Metrics& metrics) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
                continue;
            }
            out += ch;
        }
        return out + "\"";
    };
    std::string out = "{\n  \"schema\": 1";
    for (const auto& [key, value] : metrics) {
        if (key == "schema") continue;
        out += ",\n  " + quote(key) + ": ";
        std::visit(
            [&](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, double>) out += std::isfinite(v) ? format_double(v) : "null";
                else if constexpr (std::is_same_v<V, long long>) out += std::to_string(v);
                else if constexpr (std::is_same_v<V, bool>) out += v ? "true" : "false";
                else out += quote(v);
            },
            value);
    }
    return out + "\n}\n";
}

void write_metrics_json(const std::filesystem::path& path, const Metrics& metrics) {
    auto os = open_out(path);
    os << metrics_json(metrics);
    finish(os, path);
}

}  // namespace ridgenet
