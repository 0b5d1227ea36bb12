#pragma once

#include <string>
#include <vector>

#include "snyder/errors.hpp"

namespace snyder {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 6;

// Diagonal flat metric eta = diag(s_0, ..., s_{d-1}), entries +-1.
struct Metric {
    int d = 0;
    std::vector<int> signature;

    static Metric lorentzian(int d) {
        Metric m = make(d);
        m.signature.assign(static_cast<std::size_t>(d), 1);
        m.signature[0] = -1;
        return m;
    }

    static Metric euclidean(int d) {
        Metric m = make(d);
        m.signature.assign(static_cast<std::size_t>(d), 1);
        return m;
    }

    static Metric named(const std::string& name, int d) {
        if (name == "lorentzian") return lorentzian(d);
        if (name == "euclidean") return euclidean(d);
        throw error("unknown metric '" + name + "' (expected lorentzian or euclidean)");
    }

    int eta(int mu, int nu) const {
        check_index(mu);
        check_index(nu);
        return mu == nu ? signature[static_cast<std::size_t>(mu)] : 0;
    }

    void check_index(int mu) const {
        if (mu < 0 || mu >= d) throw error("index " + std::to_string(mu) + " out of range for dimension " + std::to_string(d));
    }

    friend bool operator==(const Metric& a, const Metric& b) {
        return a.d == b.d && a.signature == b.signature;
    }
    friend bool operator!=(const Metric& a, const Metric& b) { return !(a == b); }

private:
    static Metric make(int d) {
        if (d < kMinDim || d > kMaxDim)
            throw error("dimension " + std::to_string(d) + " unsupported (need " +
                        std::to_string(kMinDim) + " <= d <= " + std::to_string(kMaxDim) + ")");
        Metric m;
        m.d = d;
        return m;
    }
};

} // namespace snyder
