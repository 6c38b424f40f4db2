#pragma once

#include <Eigen/Dense>
#include <compare>
#include <string>
#include <vector>

namespace minclass {

/// A model is a set of predictor column indices, kept strictly increasing.
struct Model {
    std::vector<int> indices;

    Model() = default;
    /// Sorts the given indices; throws InputError on duplicates or negatives.
    explicit Model(std::vector<int> idx);

    int size() const { return static_cast<int>(indices.size()); }
    bool empty() const { return indices.empty(); }
    bool contains(int j) const;

    /// Throws InputError unless all indices lie in [0, p).
    void check_range(int p) const;

    Model with_swap(int removed, int added) const;

    std::string to_string(char sep = ';') const;
    static Model from_string(const std::string& text, char sep = ';');

    friend auto operator<=>(const Model&, const Model&) = default;
};

/// Raw input table: predictors column-wise plus a response vector.
struct RawTable {
    Eigen::MatrixXd values;                 // n x p
    std::vector<std::string> column_names;  // p labels
    Eigen::VectorXd response;               // n

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index p() const { return values.cols(); }

    /// Checks shape agreement, n >= 2, p >= 1 and finiteness of all entries.
    void validate() const;
};

/// Centered/scaled predictors and centered response, together with the
/// constants needed to map coefficients back to the raw scale.
struct Dataset {
    Eigen::MatrixXd x;   // each column mean 0, scaled
    Eigen::VectorXd y;   // mean 0
    Eigen::VectorXd x_means;
    Eigen::VectorXd x_scales;  // strictly positive
    double y_mean = 0.0;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
    std::vector<std::string> column_names;  // may be empty

    /// Wraps already-prepared matrices without standardizing them. Used by
    /// tests and bindings that construct designs directly.
    static Dataset from_parts(Eigen::MatrixXd x, Eigen::VectorXd y,
                              std::vector<std::string> names = {});
};

struct LeastSquaresFit {
    Model model;
    Eigen::VectorXd coefficients;  // one per model index
    double mse = 0.0;              // (1/n) * ||y - X_S b||^2
};

}  // namespace minclass
