#include "tqe/state_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace tqe {

namespace {

using nlohmann::json;

std::vector<int> parse_dims(const json& j) {
    if (!j.contains("dims") || !j["dims"].is_array())
        throw Error("SchemaError", "missing \"dims\" array");
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer() || d.get<long>() < 1)
            throw Error("SchemaError", "\"dims\" entries must be positive integers");
        dims.push_back(d.get<int>());
    }
    if (dims.empty()) throw Error("SchemaError", "\"dims\" must be nonempty");
    return dims;
}

std::vector<double> parse_real_array(const json& j, const char* key, long expected) {
    if (!j.contains(key) || !j[key].is_array())
        throw Error("SchemaError", std::string("missing \"") + key + "\" array");
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw Error("SchemaError", std::string(key) + " entries must be numbers");
        out.push_back(v.get<double>());
    }
    if (static_cast<long>(out.size()) != expected)
        throw Error("SchemaError", std::string("\"") + key + "\" has length " +
                                       std::to_string(out.size()) + ", expected " +
                                       std::to_string(expected));
    return out;
}

}  // namespace

StateVariant parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("ParseError", e.what());
    }
    if (!j.is_object()) throw Error("SchemaError", "top level must be an object");

    const std::vector<int> dims = parse_dims(j);
    long dim = 1;
    for (int d : dims) dim *= d;

    if (j.contains("re") || j.contains("im")) {
        const auto re = parse_real_array(j, "re", dim);
        const auto im = parse_real_array(j, "im", dim);
        Vec amp(dim);
        for (long i = 0; i < dim; ++i) amp(i) = Complex(re[i], im[i]);
        const double n2 = amp.squaredNorm();
        if (std::abs(n2 - 1.0) > 1e-9)
            throw Error("SchemaError", "amplitudes are not normalized: |psi|^2 deviates from 1 by " +
                                           std::to_string(n2 - 1.0));
        amp /= std::sqrt(n2);
        return PureState(std::move(amp), dims);
    }
    if (j.contains("matrix_re") || j.contains("matrix_im")) {
        const auto re = parse_real_array(j, "matrix_re", dim * dim);
        const auto im = parse_real_array(j, "matrix_im", dim * dim);
        Mat m(dim, dim);
        for (long r = 0; r < dim; ++r)
            for (long c = 0; c < dim; ++c)
                m(r, c) = Complex(re[r * dim + c], im[r * dim + c]);
        try {
            return validate_density(CMatrix(std::move(m), dims));
        } catch (const Error& e) {
            throw Error("SchemaError", std::string("not a density matrix: ") + e.what());
        }
    }
    throw Error("SchemaError", "expected \"re\"/\"im\" or \"matrix_re\"/\"matrix_im\"");
}

StateVariant load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_state_json(ss.str());
}

std::string state_to_json(const PureState& psi) {
    json j;
    j["dims"] = psi.dims();
    std::vector<double> re(psi.dim()), im(psi.dim());
    for (int i = 0; i < psi.dim(); ++i) {
        re[i] = psi.amp()(i).real();
        im[i] = psi.amp()(i).imag();
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

std::string state_to_json(const DensityMatrix& rho) {
    json j;
    j["dims"] = rho.dims();
    const int d = rho.dim();
    std::vector<double> re(static_cast<size_t>(d) * d), im(static_cast<size_t>(d) * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            re[static_cast<size_t>(r) * d + c] = rho.mat()(r, c).real();
            im[static_cast<size_t>(r) * d + c] = rho.mat()(r, c).imag();
        }
    j["matrix_re"] = re;
    j["matrix_im"] = im;
    return j.dump();
}

}  // namespace tqe
