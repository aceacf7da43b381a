#ifndef QLV_KARITH_HPP
#define QLV_KARITH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlv/errors.hpp"

namespace qlv {

// Arithmetic configuration of the quantized domain K: signed two's-complement
// style range [-2^(n-1), 2^(n-1)-1] for a bitwidth n between 2 and 16. The
// minimum of 2 bits guarantees 1 is in K. The top value doubles as the
// "+infinity" (limit) of the QFBAPA_K cardinality semantics.
class KConfig {
public:
    explicit KConfig(int bitwidth) : bits_(bitwidth) {
        if (bitwidth < 2 || bitwidth > 16)
            throw ConfigError("bitwidth must be in [2,16], got " + std::to_string(bitwidth));
    }

    int bitwidth() const { return bits_; }
    int min() const { return -(1 << (bits_ - 1)); }
    int max() const { return (1 << (bits_ - 1)) - 1; }
    int limit() const { return max(); }
    int card() const { return 1 << bits_; }

    bool contains(long long v) const { return v >= min() && v <= max(); }
    int clamp(long long v) const {
        if (v < min()) return min();
        if (v > max()) return max();
        return static_cast<int>(v);
    }

    friend bool operator==(const KConfig& a, const KConfig& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const KConfig& a, const KConfig& b) { return a.bits_ != b.bits_; }

private:
    int bits_;
};

// A value of K tagged with its configuration. Every operation checks the
// configs agree and clamps its exact integer result back into range.
struct KNum {
    int value;
    KConfig cfg;

    KNum(int v, KConfig c) : value(v), cfg(c) {
        if (!cfg.contains(v))
            throw RangeError(std::to_string(v) + " outside K with bitwidth " +
                             std::to_string(cfg.bitwidth()));
    }

    friend bool operator==(const KNum& a, const KNum& b) {
        return a.value == b.value && a.cfg == b.cfg;
    }
};

namespace detail {
inline void require_same(const KConfig& a, const KConfig& b, const char* op) {
    if (a != b)
        throw ConfigError(std::string(op) + ": operands carry different KConfigs (" +
                          std::to_string(a.bitwidth()) + " vs " + std::to_string(b.bitwidth()) +
                          " bits)");
}
}  // namespace detail

inline KNum k_add(const KNum& a, const KNum& b) {
    detail::require_same(a.cfg, b.cfg, "k_add");
    return KNum(a.cfg.clamp(static_cast<long long>(a.value) + b.value), a.cfg);
}

inline KNum k_mul_const(const KNum& c, const KNum& a) {
    detail::require_same(c.cfg, a.cfg, "k_mul_const");
    return KNum(a.cfg.clamp(static_cast<long long>(c.value) * a.value), a.cfg);
}

// Left-to-right fold of k_add; the empty sequence sums to 0. Ordering the
// sequence is the caller's job (the evaluator sorts ascending by value).
inline KNum k_fold_sum(const KConfig& cfg, std::span<const int> values) {
    long long acc = 0;
    for (int v : values) {
        if (!cfg.contains(v))
            throw RangeError("k_fold_sum: element outside K");
        acc = cfg.clamp(acc + v);
    }
    return KNum(static_cast<int>(acc), cfg);
}

inline KNum k_fold_sum(std::span<const KNum> values, const KConfig& cfg) {
    long long acc = 0;
    for (const KNum& v : values) {
        detail::require_same(v.cfg, cfg, "k_fold_sum");
        acc = cfg.clamp(acc + v.value);
    }
    return KNum(static_cast<int>(acc), cfg);
}

enum class ActKind { Relu, TrRelu, Heaviside, Identity, Table };

// Activation registry entry. Table activations must be total over K: exactly
// 2^n entries, index i mapping value min+i.
class Activation {
public:
    static Activation relu() { return Activation(ActKind::Relu); }
    static Activation trrelu() { return Activation(ActKind::TrRelu); }
    static Activation heaviside() { return Activation(ActKind::Heaviside); }
    static Activation identity() { return Activation(ActKind::Identity); }
    static Activation table(const KConfig& cfg, std::vector<int> entries) {
        if (static_cast<int>(entries.size()) != cfg.card())
            throw ConfigError("table activation must have exactly " + std::to_string(cfg.card()) +
                              " entries, got " + std::to_string(entries.size()));
        for (int e : entries)
            if (!cfg.contains(e)) throw RangeError("table activation entry outside K");
        Activation a(ActKind::Table);
        a.table_ = std::move(entries);
        return a;
    }
    static Activation from_name(const std::string& name);

    ActKind kind() const { return kind_; }
    const std::vector<int>& entries() const { return table_; }
    std::string name() const;

    // Raw application; the table path assumes the entry count matches cfg.
    int apply(const KConfig& cfg, int v) const {
        switch (kind_) {
            case ActKind::Relu: return v > 0 ? v : 0;
            case ActKind::TrRelu: return v < 0 ? 0 : (v > 1 ? 1 : v);
            case ActKind::Heaviside: return v >= 0 ? 1 : 0;
            case ActKind::Identity: return v;
            case ActKind::Table: return table_[static_cast<std::size_t>(v - cfg.min())];
        }
        return v;
    }

    friend bool operator==(const Activation& a, const Activation& b) {
        return a.kind_ == b.kind_ && a.table_ == b.table_;
    }

private:
    explicit Activation(ActKind k) : kind_(k) {}
    ActKind kind_;
    std::vector<int> table_;
};

inline KNum apply_activation(const Activation& alpha, const KNum& a) {
    if (alpha.kind() == ActKind::Table &&
        static_cast<int>(alpha.entries().size()) != a.cfg.card())
        throw ConfigError("table activation is not total over this K");
    return KNum(alpha.apply(a.cfg, a.value), a.cfg);
}

inline std::string Activation::name() const {
    switch (kind_) {
        case ActKind::Relu: return "relu";
        case ActKind::TrRelu: return "trrelu";
        case ActKind::Heaviside: return "heaviside";
        case ActKind::Identity: return "identity";
        case ActKind::Table: return "table";
    }
    return "?";
}

inline Activation Activation::from_name(const std::string& name) {
    if (name == "relu") return relu();
    if (name == "trrelu") return trrelu();
    if (name == "heaviside") return heaviside();
    if (name == "identity") return identity();
    throw ConfigError("unknown activation '" + name + "'");
}

}  // namespace qlv

#endif  // QLV_KARITH_HPP
