#pragma once

#include "ainf/exactlin/sparse.hpp"

#include <map>
#include <string>
#include <vector>

namespace ainf {

/// Finite-dimensional Z-graded space with a named basis in each degree.
/// Degrees outside [low, low + labels.size()) are zero.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    GradedVectorSpace(int low, std::vector<std::vector<std::string>> labels);
    // Anonymous basis "e<deg>_<k>" with the given dims starting in degree 0.
    static GradedVectorSpace with_dims(const std::vector<int>& dims);

    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(labels_.size()) - 1; }
    int dim(int degree) const;
    int total_dim() const;
    std::vector<int> dims() const;  // from degree 0 upward; requires low() >= 0
    const std::vector<std::string>& labels(int degree) const;

    bool operator==(const GradedVectorSpace& o) const;

private:
    void normalise();

    int low_ = 0;
    std::vector<std::vector<std::string>> labels_;
};

GradedVectorSpace shift(const GradedVectorSpace& v, int n);
GradedVectorSpace tensor_space(const GradedVectorSpace& v, const GradedVectorSpace& w);

/// Homogeneous map of degree k: block i is a (dim tgt_{i+k}) x (dim src_i)
/// matrix. Missing blocks are zero.
struct GradedLinearMap {
    GradedVectorSpace source;
    GradedVectorSpace target;
    int degree = 0;
    std::map<int, SparseMatrix> blocks;

    static GradedLinearMap identity(const GradedVectorSpace& v);
    static GradedLinearMap zero(const GradedVectorSpace& s, const GradedVectorSpace& t, int degree);

    SparseMatrix block(int source_degree) const;
    void set_block(int source_degree, SparseMatrix m);
    bool is_zero() const;
    bool operator==(const GradedLinearMap& o) const;
};

/// f∘g; degrees add.
GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap add(const GradedLinearMap& f, const GradedLinearMap& g, const Scalar& c = 1);

/// Graded tensor product of maps: (f⊗g)(a⊗b) = (-1)^{|a||g|} f(a)⊗g(b).
GradedLinearMap tensor_map(const GradedLinearMap& f, const GradedLinearMap& g);

}  // namespace ainf
