use std::fmt::Write as _;

use super::{
    extended_rhs, na_qubit_rhs, standard_qubit_rhs, DynamicsError, DynamicsModel, ExtendedState,
    FieldConfig, ModelState, SpinState,
};

/// A finite-dimensional state the RK4 stepper can advance.
pub trait OdeState: Copy {
    /// `self + h·k`
    fn axpy(&self, k: &Self, h: f64) -> Self;
    fn components(&self) -> Vec<f64>;
    /// CSV column names after `t`.
    fn column_names(&self) -> &'static [&'static str];

    fn is_finite(&self) -> bool {
        self.components().iter().all(|x| x.is_finite())
    }
}

impl OdeState for SpinState {
    fn axpy(&self, k: &Self, h: f64) -> Self {
        SpinState::new(std::array::from_fn(|i| self.s[i] + h * k.s[i]))
    }

    fn components(&self) -> Vec<f64> {
        self.s.to_vec()
    }

    fn column_names(&self) -> &'static [&'static str] {
        &["s1", "s2", "s3"]
    }
}

impl OdeState for ExtendedState {
    fn axpy(&self, k: &Self, h: f64) -> Self {
        ExtendedState::new(
            std::array::from_fn(|i| self.s[i] + h * k.s[i]),
            std::array::from_fn(|i| self.l[i] + h * k.l[i]),
        )
    }

    fn components(&self) -> Vec<f64> {
        self.s.iter().chain(&self.l).copied().collect()
    }

    fn column_names(&self) -> &'static [&'static str] {
        &["s1", "s2", "s3", "l1", "l2", "l3"]
    }
}

impl OdeState for ModelState {
    fn axpy(&self, k: &Self, h: f64) -> Self {
        match (self, k) {
            (ModelState::Spin(a), ModelState::Spin(b)) => ModelState::Spin(a.axpy(b, h)),
            (ModelState::Extended(a), ModelState::Extended(b)) => {
                ModelState::Extended(a.axpy(b, h))
            }
            _ => panic!("mixed state variants in one integration"),
        }
    }

    fn components(&self) -> Vec<f64> {
        match self {
            ModelState::Spin(s) => s.components(),
            ModelState::Extended(x) => x.components(),
        }
    }

    fn column_names(&self) -> &'static [&'static str] {
        match self {
            ModelState::Spin(s) => s.column_names(),
            ModelState::Extended(x) => x.column_names(),
        }
    }
}

/// One classical fourth-order Runge–Kutta step.
pub fn rk4_step<S: OdeState>(y: &S, h: f64, f: &impl Fn(&S) -> S) -> S {
    let k1 = f(y);
    let k2 = f(&y.axpy(&k1, h / 2.0));
    let k3 = f(&y.axpy(&k2, h / 2.0));
    let k4 = f(&y.axpy(&k3, h));
    y.axpy(&k1, h / 6.0)
        .axpy(&k2, h / 3.0)
        .axpy(&k3, h / 3.0)
        .axpy(&k4, h / 6.0)
}

/// Uniformly sampled solution; `times[0] = 0` and `times.last() = t_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<S> {
    pub times: Vec<f64>,
    pub states: Vec<S>,
}

impl<S: OdeState> Trajectory<S> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn final_state(&self) -> &S {
        self.states.last().expect("trajectory holds the initial state")
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &S)> {
        self.times.iter().copied().zip(&self.states)
    }

    /// Largest deviation of `q(state)` from its initial value.
    pub fn max_drift(&self, q: impl Fn(&S) -> f64) -> f64 {
        let q0 = q(&self.states[0]);
        self.states.iter().map(|s| (q(s) - q0).abs()).fold(0.0, f64::max)
    }

    /// Header `t,s1,s2,s3[,l1,l2,l3]`, one row per sample, 17 significant
    /// digits per value.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t");
        if let Some(first) = self.states.first() {
            for name in first.column_names() {
                out.push(',');
                out.push_str(name);
            }
        }
        out.push('\n');
        for (t, s) in self.iter() {
            write!(out, "{t:.16e}").unwrap();
            for x in s.components() {
                write!(out, ",{x:.16e}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Fixed-step RK4 from `t = 0` to `t_max`.
///
/// The step count is `round(t_max / dt)` and the actual step is
/// `t_max / steps`, so the grid is uniform and ends exactly at `t_max`.
pub fn integrate<S: OdeState>(
    initial: S,
    t_max: f64,
    dt: f64,
    rhs: impl Fn(&S) -> S,
) -> Result<Trajectory<S>, DynamicsError> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(DynamicsError::InvalidStep(dt));
    }
    if !(t_max.is_finite() && t_max >= dt) {
        return Err(DynamicsError::InvalidHorizon { t_max, dt });
    }
    if !initial.is_finite() {
        return Err(DynamicsError::NonFinite { time: 0.0 });
    }
    let steps = (t_max / dt).round().max(1.0) as usize;
    let h = t_max / steps as f64;

    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(0.0);
    states.push(initial);
    let mut y = initial;
    for i in 1..=steps {
        y = rk4_step(&y, h, &rhs);
        let t = if i == steps { t_max } else { i as f64 * h };
        if !y.is_finite() {
            return Err(DynamicsError::NonFinite { time: t });
        }
        times.push(t);
        states.push(y);
    }
    Ok(Trajectory { times, states })
}

/// Integrates the component equations of `model`.
pub fn integrate_model(
    model: DynamicsModel,
    initial: ModelState,
    field: &FieldConfig,
    t_max: f64,
    dt: f64,
) -> Result<Trajectory<ModelState>, DynamicsError> {
    let field = *field;
    match (model, initial) {
        (DynamicsModel::StandardQubit, ModelState::Spin(_)) => integrate(initial, t_max, dt, |y| {
            ModelState::Spin(standard_qubit_rhs(y.as_spin(), &field))
        }),
        (DynamicsModel::NaQubit, ModelState::Spin(_)) => integrate(initial, t_max, dt, |y| {
            ModelState::Spin(na_qubit_rhs(y.as_spin(), &field))
        }),
        (DynamicsModel::Extended, ModelState::Extended(_)) => {
            integrate(initial, t_max, dt, |y| {
                ModelState::Extended(extended_rhs(y.as_extended(), &field))
            })
        }
        (model, state) => Err(DynamicsError::StateMismatch {
            model: model.name(),
            state: state.kind_name(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential_decay_is_fourth_order() {
        #[derive(Clone, Copy)]
        struct Scalar(f64);
        impl OdeState for Scalar {
            fn axpy(&self, k: &Self, h: f64) -> Self {
                Scalar(self.0 + h * k.0)
            }
            fn components(&self) -> Vec<f64> {
                vec![self.0]
            }
            fn column_names(&self) -> &'static [&'static str] {
                &["x"]
            }
        }
        let err = |dt: f64| {
            let tr = integrate(Scalar(1.0), 1.0, dt, |y| Scalar(-y.0)).unwrap();
            (tr.final_state().0 - (-1.0f64).exp()).abs()
        };
        let ratio = err(0.1) / err(0.05);
        assert!((ratio - 16.0).abs() < 1.0, "convergence ratio {ratio}");
    }

    #[test]
    fn grid_ends_at_t_max() {
        let f = FieldConfig::single([0.0, 0.0, 1.0]);
        let tr = integrate(SpinState::new([1.0, 0.0, 0.0]), 2.0 * PI, 1e-3, |y| {
            standard_qubit_rhs(y, &f)
        })
        .unwrap();
        assert_eq!(*tr.times.last().unwrap(), 2.0 * PI);
        assert_eq!(tr.len(), 6284);
        let s = tr.final_state().s;
        assert!((s[0] - 1.0).abs() < 1e-6 && s[1].abs() < 1e-6 && s[2].abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_steps() {
        let f = |y: &SpinState| *y;
        let s0 = SpinState::default();
        assert_eq!(integrate(s0, 1.0, 0.0, f), Err(DynamicsError::InvalidStep(0.0)));
        assert!(matches!(integrate(s0, 1.0, -0.1, f), Err(DynamicsError::InvalidStep(_))));
        assert!(matches!(
            integrate(s0, 0.01, 0.1, f),
            Err(DynamicsError::InvalidHorizon { .. })
        ));
    }

    #[test]
    fn reports_blow_up_time() {
        let r = integrate(SpinState::new([1.0, 0.0, 0.0]), 10.0, 0.1, |y| {
            SpinState::new(y.s.map(|x| x * x * 1e3))
        });
        match r {
            Err(DynamicsError::NonFinite { time }) => assert!(time > 0.0 && time < 10.0),
            other => panic!("expected blow-up, got {other:?}"),
        }
    }

    #[test]
    fn csv_layout() {
        let tr = Trajectory {
            times: vec![0.0, 0.5],
            states: vec![
                ExtendedState::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
                ExtendedState::new([0.1, 0.2, 0.3], [0.4, 0.5, 0.6]),
            ],
        };
        let csv = tr.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,s1,s2,s3,l1,l2,l3");
        assert_eq!(lines.len(), 3);
        let v: Vec<f64> = lines[2].split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(v, vec![0.5, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6]);
    }

    #[test]
    fn model_state_mismatch() {
        let r = integrate_model(
            DynamicsModel::Extended,
            ModelState::Spin(SpinState::default()),
            &FieldConfig::default(),
            1.0,
            0.1,
        );
        assert!(matches!(r, Err(DynamicsError::StateMismatch { .. })));
    }
}
