/// Pseudometric on the index set `{0, .., N-1}` with a volume exponent `P`
/// bounding ball growth: `|B_tau(x)| <= tau^P` for all `tau >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexMetric {
    /// Cyclic distance `min(|x-y|, N-|x-y|)`; the natural geometry for
    /// translation-invariant correlation structures.
    Circle { n: usize, p: f64 },
    /// Linear distance `|x-y|`.
    Path { n: usize, p: f64 },
    /// `d(x, y) = +inf` for `x != y`; mean-field data carries no geometry.
    Discrete { n: usize },
}

impl IndexMetric {
    pub fn circle(n: usize) -> Self {
        IndexMetric::Circle { n, p: 3.0 }
    }

    pub fn path(n: usize) -> Self {
        IndexMetric::Path { n, p: 3.0 }
    }

    pub fn discrete(n: usize) -> Self {
        IndexMetric::Discrete { n }
    }

    pub fn dim(&self) -> usize {
        match self {
            IndexMetric::Circle { n, .. }
            | IndexMetric::Path { n, .. }
            | IndexMetric::Discrete { n } => *n,
        }
    }

    pub fn volume_exponent(&self) -> f64 {
        match self {
            IndexMetric::Circle { p, .. } | IndexMetric::Path { p, .. } => *p,
            IndexMetric::Discrete { .. } => 1.0,
        }
    }

    pub fn dist(&self, x: usize, y: usize) -> f64 {
        match self {
            IndexMetric::Circle { n, .. } => {
                let d = x.abs_diff(y);
                d.min(n - d) as f64
            }
            IndexMetric::Path { .. } => x.abs_diff(y) as f64,
            IndexMetric::Discrete { .. } => {
                if x == y {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    pub fn ball_size(&self, x: usize, tau: f64) -> usize {
        (0..self.dim()).filter(|&y| self.dist(x, y) <= tau).count()
    }

    /// Checks `|B_tau(x)| <= tau^P` for every center and every integer
    /// radius `2 <= tau <= N`.
    pub fn verify_ball_growth(&self) -> bool {
        let n = self.dim();
        (2..=n).all(|tau| {
            let bound = (tau as f64).powf(self.volume_exponent());
            (0..n).all(|x| (self.ball_size(x, tau as f64) as f64) <= bound)
        })
    }
}
