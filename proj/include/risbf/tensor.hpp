#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace risbf {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_numel(const Shape& s) {
    std::size_t n = 1;
    for (auto d : s) n *= d;
    return n;
}

// Dense row-major f64 tensor. Complex data is stored as a trailing dim of 2
// holding interleaved (re, im) pairs.
struct Tensor {
    Shape shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(Shape s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}
    Tensor(Shape s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != shape_numel(shape))
            throw std::invalid_argument("Tensor: data size does not match shape");
    }

    static Tensor zeros(Shape s) { return Tensor(std::move(s)); }
    static Tensor full(Shape s, double v) {
        Tensor t(std::move(s));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }
    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    bool empty() const { return data.empty(); }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    // complex views over the interleaved storage (shape must end in 2)
    std::complex<double>* cdata() { return reinterpret_cast<std::complex<double>*>(data.data()); }
    const std::complex<double>* cdata() const {
        return reinterpret_cast<const std::complex<double>*>(data.data());
    }
    std::size_t csize() const { return data.size() / 2; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

inline bool tensor_all_finite(const Tensor& t) {
    for (double v : t.data)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace risbf
