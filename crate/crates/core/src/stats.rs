//! Small order-statistic and moment helpers.

/// Median with linear interpolation between the two middle order statistics.
/// Reorders `xs`. Returns NaN for an empty slice.
pub fn median_in_place(xs: &mut [f64]) -> f64 {
    let n = xs.len();
    if n == 0 {
        return f64::NAN;
    }
    let mid = (n - 1) / 2;
    let (_, lo, upper) = xs.select_nth_unstable_by(mid, f64::total_cmp);
    let lo = *lo;
    if n % 2 == 1 {
        lo
    } else {
        let hi = upper.iter().copied().fold(f64::INFINITY, f64::min);
        lo + 0.5 * (hi - lo)
    }
}

pub fn median(xs: &[f64]) -> f64 {
    median_in_place(&mut xs.to_vec())
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation with the `n - 1` denominator; zero for fewer
/// than two values.
pub fn sample_sd(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}
