#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fcoord::coordnet {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Per-feature affine min/max normalization to [-1, 1]. A degenerate range
// maps to 0 on the way in and to the constant `min` on the way out, so a
// network trained on all-identical targets reproduces them exactly.
struct Scaler {
    VectorXd min;
    VectorXd max;

    static Scaler identity(int n);
    static Scaler fit(const MatrixXd& rows);
    VectorXd scale(const VectorXd& x) const;
    VectorXd unscale(const VectorXd& y) const;
    MatrixXd scale_rows(const MatrixXd& x) const;
    MatrixXd unscale_rows(const MatrixXd& y) const;
};

// One-hidden-layer feed-forward network: tanh hidden units, linear output.
struct Mlp {
    int n_in = 0;
    int n_hidden = 0;
    int n_out = 0;
    MatrixXd w1;  // n_hidden x n_in
    VectorXd b1;  // n_hidden
    MatrixXd w2;  // n_out x n_hidden
    VectorXd b2;  // n_out
    Scaler input_scaler;
    Scaler target_scaler;

    VectorXd forward(const VectorXd& x) const;
    MatrixXd forward_rows(const MatrixXd& x) const;  // one sample per row
};

// Seeded uniform init in +-1/sqrt(fan_in); identity scalers.
Mlp make_mlp(int n_in, int n_hidden, int n_out, std::uint64_t seed);

struct Dataset {
    MatrixXd inputs;   // k x n_in
    MatrixXd targets;  // k x n_out
    std::vector<std::string> feature_names;
    std::vector<std::string> target_names;

    Eigen::Index rows() const { return inputs.rows(); }
};

struct TrainConfig {
    double learning_rate = 0.01;
    int batch_size = 64;
    int max_epochs = 500;
    double train_ratio = 0.70;
    double val_ratio = 0.15;
    double test_ratio = 0.15;
    std::uint64_t rng_seed = 1;
    int early_stop_patience = 0;  // 0 disables early stopping
};

struct TrainReport {
    std::vector<double> train_mse;
    std::vector<double> val_mse;
    std::vector<double> test_mse;
    int best_epoch = 0;
    double best_val_mse = 0.0;
    double final_train_mse = 0.0;
    double final_val_mse = 0.0;
    double final_test_mse = 0.0;
    double r_train = 0.0, r_val = 0.0, r_test = 0.0, r_all = 0.0;
};

// Mean squared error, C = (1/k) sum ||pred_i - target_i||^2.
double mse_cost(const MatrixXd& preds, const MatrixXd& targets);

// R = sqrt(1 - MSE_pred / MSE_mean), radicand clamped at 0. Throws
// ConfigError on zero target variance.
double regression_r(const MatrixXd& preds, const MatrixXd& targets);

struct Gradients {
    MatrixXd w1;
    VectorXd b1;
    MatrixXd w2;
    VectorXd b2;
};

// Analytic gradients of the raw-domain cost over the batch.
Gradients backprop_gradients(const Mlp& mlp, const MatrixXd& batch_x, const MatrixXd& batch_y);

struct Split {
    Dataset train;
    Dataset val;
    Dataset test;
};

// Uniform random partition without replacement; floor allocation for val and
// test, remainder to train; deterministic given the seed.
Split split_dataset(const Dataset& ds, double train_ratio, double val_ratio, double test_ratio,
                    std::uint64_t seed);

struct TrainResult {
    Mlp mlp;  // weights with the lowest validation MSE
    TrainReport report;
};

// Mini-batch gradient descent; scalers fitted on the training split only.
TrainResult train(const Mlp& mlp_init, const Dataset& dataset, const TrainConfig& config);

// JSON weight persistence; round-trips bit-exactly.
void save_weights(const Mlp& mlp, const std::string& path);
Mlp load_weights(const std::string& path);

// Dataset file: CSV with named feature columns and a target_uc column.
void save_dataset_csv(const Dataset& ds, const std::string& path);
Dataset load_dataset_csv(const std::string& path);

} // namespace fcoord::coordnet
