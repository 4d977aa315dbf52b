#include "qdunkl/io.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "qdunkl/errors.hpp"
#include "qdunkl/quaternion.hpp"

namespace qdunkl {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

void write_csv(const SampledField& f, std::ostream& os) {
    const Grid2D& g = *f.grid;
    os << "x1,x2,w,x,y,z\n";
    os << std::setprecision(17);
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            const Quaternion& q = f.at(i, j);
            os << g.rule1.nodes[i] << ',' << g.rule2.nodes[j] << ',' << q.w << ',' << q.x << ','
               << q.y << ',' << q.z << '\n';
        }
    }
}

SampledField read_csv(GridPtr grid, std::istream& is) {
    SampledField f(std::move(grid));
    const Grid2D& g = *f.grid;
    std::string line;
    if (!std::getline(is, line)) throw GridMismatch("read_csv: empty input");
    // tolerate the header with or without trailing whitespace
    if (line.rfind("x1,x2,w,x,y,z", 0) != 0)
        throw GridMismatch("read_csv: expected header 'x1,x2,w,x,y,z'");

    std::size_t count = 0;
    const std::size_t total = f.values.size();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (count >= total) throw GridMismatch("read_csv: more rows than grid points");
        std::istringstream ss(line);
        double v[6];
        char comma;
        for (int c = 0; c < 6; ++c) {
            if (!(ss >> v[c])) throw GridMismatch("read_csv: malformed row " + std::to_string(count));
            if (c < 5 && !(ss >> comma && comma == ','))
                throw GridMismatch("read_csv: malformed row " + std::to_string(count));
        }
        const int i = static_cast<int>(count) / g.n2();
        const int j = static_cast<int>(count) % g.n2();
        if (std::abs(v[0] - g.rule1.nodes[i]) > 1e-9 || std::abs(v[1] - g.rule2.nodes[j]) > 1e-9)
            throw GridMismatch("read_csv: node mismatch at row " + std::to_string(count));
        f.at(i, j) = {v[2], v[3], v[4], v[5]};
        ++count;
    }
    if (count != total) throw GridMismatch("read_csv: fewer rows than grid points");
    return f;
}

json field_to_json(const SampledField& f) {
    const Grid2D& g = *f.grid;
    json j;
    j["chi1"] = g.rule1.chi;
    j["chi2"] = g.rule2.chi;
    j["N1"] = g.rule1.size();
    j["N2"] = g.rule2.size();
    json vals = json::array();
    for (const Quaternion& q : f.values) vals.push_back({q.w, q.x, q.y, q.z});
    j["values"] = std::move(vals);
    return j;
}

SampledField field_from_json(const json& j) {
    const double chi1 = j.at("chi1").get<double>();
    const double chi2 = j.at("chi2").get<double>();
    const int N1 = j.at("N1").get<int>();
    const int N2 = j.at("N2").get<int>();
    SampledField f(make_grid(chi1, chi2, N1, N2));
    const json& vals = j.at("values");
    if (vals.size() != f.values.size()) throw GridMismatch("field_from_json: value count mismatch");
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        const json& q = vals[k];
        f.values[k] = {q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                       q.at(3).get<double>()};
    }
    return f;
}

} // namespace qdunkl
