#pragma once

#include "mwtate/bigint.hpp"
#include "mwtate/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace mwtate {

/// Free{i}: Z(i)[2i].  Dyadic{t,i}: Z/2^t eta (i)[2i] (t = 0 is Z/eta).  Odd{p,r,s}: Z/p^r [s].
struct AtomicBlock {
    enum class Kind { Free, Dyadic, Odd };

    Kind kind = Kind::Free;
    int weight = 0;   // weight i for Free/Dyadic, shift s for Odd
    unsigned t = 0;   // Dyadic exponent
    BigInt p = 0;     // Odd prime
    unsigned r = 0;   // Odd exponent

    static AtomicBlock free(int weight) { return {Kind::Free, weight, 0, 0, 0}; }
    static AtomicBlock dyadic(unsigned t, int weight) { return {Kind::Dyadic, weight, t, 0, 0}; }
    /// Validates p odd prime and r >= 1.
    static AtomicBlock odd(const BigInt& p, unsigned r, int shift);

    int shift() const { return weight; }
    std::string to_string() const;

    friend bool operator==(const AtomicBlock&, const AtomicBlock&) = default;
    friend bool operator<(const AtomicBlock& a, const AtomicBlock& b);
};

/// Canonically sorted multiset of atomic blocks.
class NormalForm {
public:
    NormalForm() = default;
    NormalForm(std::initializer_list<AtomicBlock> blocks);
    explicit NormalForm(std::vector<AtomicBlock> blocks);

    const std::vector<AtomicBlock>& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }
    std::size_t size() const noexcept { return blocks_.size(); }
    bool has_odd() const;

    NormalForm& operator+=(const NormalForm& other);
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    std::string to_string() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    std::vector<AtomicBlock> blocks_;
};

struct TateCell {
    std::string id;
    int weight;
    friend bool operator==(const TateCell&, const TateCell&) = default;
};

/// Coefficient of eta from a cell of weight w+1 (`from`) to a cell of weight w (`to`).
struct Attachment {
    std::string from;
    std::string to;
    BigInt coeff;
    friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct TateComplex {
    std::vector<TateCell> cells;
    std::vector<Attachment> attach;

    const TateCell* find(const std::string& id) const;
    /// Integer complex with one generator per cell; repeated attachments are summed.
    FreeComplex free_complex() const;
};

/// Tate complex with cells named "w<weight>_<index>" realizing an integer complex.
TateComplex tate_complex_from(const FreeComplex& c);

struct Violation {
    enum class Kind { DuplicateId, UnknownCell, NonAdjacent, NonComposable };
    Kind kind;
    std::vector<std::string> cells;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

std::string_view violation_name(Violation::Kind k);

ValidationReport validate_complex(const TateComplex& c);

/// Normal form of a valid complex; InvalidComplex otherwise.
NormalForm decompose(const TateComplex& c);
/// Blocks produced by one elementary summand of the integer complex.
NormalForm blocks_of_cone(const BigInt& n, int lower_weight);

/// Canonical cell presentation of an odd-free normal form; OddBlockNotRealizable otherwise.
TateComplex realize(const NormalForm& a);

NormalForm tensor(const AtomicBlock& a, const AtomicBlock& b);
NormalForm tensor(const NormalForm& a, const NormalForm& b);
NormalForm twist(const NormalForm& a, int q);

/// Entry of an eta-matrix from a source cell to a target cell one weight lower.
struct EtaEntry {
    std::string source;
    std::string target;
    BigInt coeff;
};

/// Cone of an eta-matrix map between complexes. Source ids clashing with target ids get
/// a trailing apostrophe. Errors: IllegalEntry, NonComposableResult, InvalidComplex.
TateComplex cone_eta_map(const TateComplex& source, const TateComplex& target, const std::vector<EtaEntry>& F);

}  // namespace mwtate
