//! Bundled two-decimal reference tables for the default parameter set
//! (mu = 0.5, nu = 0.8, eta = 0.3, xi = 0.5, zeta = 0.2, vartheta = 0.5,
//! q = 0.4, k = 0.5; sigma = 0.1..0.4; x = 0(0.5)10).
//!
//! The `table` command compares its computed cells against these and writes
//! every deviation beyond +-0.02 to the discrepancy report, together with
//! the closed-form and quadrature-oracle values for that cell.

/// Grid of x values the reference tables are printed at.
pub const TABLE_X: [f64; 21] = [
    0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 6.5, 7.0, 7.5, 8.0, 8.5,
    9.0, 9.5, 10.0,
];

/// Derivative orders of the four value columns.
pub const TABLE_SIGMAS: [f64; 4] = [0.1, 0.2, 0.3, 0.4];

/// Reference values for the left-sided operator table.
#[allow(clippy::approx_constant)] // table data, not a math constant
pub const TABLE1: [[f64; 4]; 21] = [
    [0.00, 0.00, 0.00, 0.00],
    [3.30, 3.09, 2.48, 1.44],
    [4.57, 4.20, 3.30, 1.88],
    [5.53, 5.02, 3.90, 2.19],
    [6.33, 5.70, 4.38, 2.44],
    [7.03, 6.28, 4.80, 2.66],
    [7.66, 6.81, 5.18, 2.85],
    [8.24, 7.29, 5.51, 3.02],
    [8.77, 7.73, 5.82, 3.18],
    [9.27, 8.14, 6.11, 3.33],
    [9.74, 8.52, 6.38, 3.46],
    [10.19, 8.89, 6.64, 3.59],
    [10.61, 9.24, 6.88, 3.71],
    [11.02, 9.57, 7.11, 3.83],
    [11.41, 9.88, 7.32, 3.94],
    [11.79, 10.19, 7.54, 4.04],
    [12.15, 10.48, 7.74, 4.14],
    [12.50, 10.77, 7.93, 4.24],
    [12.84, 11.04, 8.12, 4.33],
    [13.17, 11.31, 8.30, 4.42],
    [13.49, 11.56, 8.48, 4.51],
];

/// Reference values for the right-sided operator table.
pub const TABLE2: [[f64; 4]; 21] = [
    [0.00, 0.00, 0.00, 0.00],
    [3.47, 3.83, 4.22, 4.67],
    [4.81, 5.19, 5.61, 6.08],
    [5.82, 6.20, 6.63, 7.09],
    [6.66, 7.04, 7.46, 7.91],
    [7.40, 7.77, 8.17, 8.61],
    [8.06, 8.42, 8.80, 9.23],
    [8.66, 9.01, 9.38, 9.79],
    [9.22, 9.55, 9.91, 10.30],
    [9.75, 10.06, 10.40, 10.77],
    [10.24, 10.54, 10.86, 11.21],
    [10.71, 10.99, 11.29, 11.62],
    [11.16, 11.42, 11.70, 12.01],
    [11.59, 11.83, 12.09, 12.38],
    [12.00, 12.22, 12.46, 12.73],
    [12.39, 12.59, 12.82, 13.07],
    [12.78, 12.96, 13.16, 13.40],
    [13.15, 13.31, 13.49, 13.71],
    [13.50, 13.65, 13.81, 14.01],
    [13.85, 13.97, 14.12, 14.30],
    [14.19, 14.29, 14.42, 14.58],
];
