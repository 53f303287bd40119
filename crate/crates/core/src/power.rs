//! Networks and the DC-OPF / Network Flow / Copper Plate model builders.
//!
//! All three models minimize the same generation cost `Σ c_i P_i`. Variables
//! are declared in the order generation (`P_<bus>`), flows
//! (`f_<from>_<to>`), angles (`theta_<bus>`), so the leading variables of a
//! DC-OPF model are exactly the variables of the two relaxations.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::NetworkError;
use crate::model::{LpModel, ObjectiveSense, Role, RowSense, VarId};

#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub from: usize,
    pub to: usize,
    /// Per-unit reactance, > 0.
    pub reactance: f64,
    /// Symmetric flow limit, > 0.
    pub limit: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generator {
    pub cost: f64,
    pub capacity: f64,
    /// False for the zero-capacity generator every bus implicitly has.
    pub declared: bool,
}

/// Raw line record, referring to buses by id.
#[derive(Debug, Clone, PartialEq)]
pub struct LineData {
    pub from: String,
    pub to: String,
    pub reactance: f64,
    pub limit: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorData {
    pub bus: String,
    pub cost: f64,
    pub capacity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LoadData {
    pub bus: String,
    pub demand: f64,
}

/// A validated, connected transmission network.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    buses: Vec<String>,
    lines: Vec<Line>,
    generators: Vec<Generator>,
    loads: Vec<f64>,
}

impl Network {
    pub fn new(
        buses: Vec<String>,
        lines: Vec<LineData>,
        generators: Vec<GeneratorData>,
        loads: Vec<LoadData>,
    ) -> Result<Network, NetworkError> {
        if buses.is_empty() {
            return Err(NetworkError::Schema("bus list is empty".into()));
        }
        for (i, b) in buses.iter().enumerate() {
            if buses[..i].contains(b) {
                return Err(NetworkError::DuplicateBus(b.clone()));
            }
        }
        let find = |bus: &str, context: String| {
            buses
                .iter()
                .position(|b| b == bus)
                .ok_or_else(|| NetworkError::DanglingBus { bus: bus.into(), context })
        };

        let mut out_lines: Vec<Line> = Vec::with_capacity(lines.len());
        for l in &lines {
            let ctx = || format!("line {}->{}", l.from, l.to);
            let from = find(&l.from, ctx())?;
            let to = find(&l.to, ctx())?;
            if from == to {
                return Err(NetworkError::SelfLoop { from: l.from.clone(), to: l.to.clone() });
            }
            if out_lines.iter().any(|o| o.from == from && o.to == to) {
                return Err(NetworkError::DuplicateLine { from: l.from.clone(), to: l.to.clone() });
            }
            if l.reactance <= 0.0 || !l.reactance.is_finite() {
                return Err(NetworkError::NonPositiveReactance {
                    from: l.from.clone(),
                    to: l.to.clone(),
                    reactance: l.reactance,
                });
            }
            if l.limit <= 0.0 || !l.limit.is_finite() {
                return Err(NetworkError::NonPositiveLimit { from: l.from.clone(), to: l.to.clone(), limit: l.limit });
            }
            out_lines.push(Line { from, to, reactance: l.reactance, limit: l.limit });
        }

        let mut gens = vec![Generator { cost: 0.0, capacity: 0.0, declared: false }; buses.len()];
        for g in &generators {
            let i = find(&g.bus, "generator".into())?;
            if gens[i].declared {
                return Err(NetworkError::DuplicateEntry { bus: g.bus.clone(), what: "generator" });
            }
            if g.capacity < 0.0 || !g.capacity.is_finite() {
                return Err(NetworkError::NegativeValue { bus: g.bus.clone(), what: "capacity", value: g.capacity });
            }
            if !g.cost.is_finite() {
                return Err(NetworkError::Schema(format!("generator cost at bus `{}` is not finite", g.bus)));
            }
            gens[i] = Generator { cost: g.cost, capacity: g.capacity, declared: true };
        }

        let mut demand = vec![0.0; buses.len()];
        let mut seen = vec![false; buses.len()];
        for l in &loads {
            let i = find(&l.bus, "load".into())?;
            if seen[i] {
                return Err(NetworkError::DuplicateEntry { bus: l.bus.clone(), what: "load" });
            }
            if l.demand < 0.0 || !l.demand.is_finite() {
                return Err(NetworkError::NegativeValue { bus: l.bus.clone(), what: "load", value: l.demand });
            }
            seen[i] = true;
            demand[i] = l.demand;
        }

        let net = Network { buses, lines: out_lines, generators: gens, loads: demand };
        if let Some(i) = net.unreachable_bus() {
            return Err(NetworkError::Disconnected(net.buses[i].clone()));
        }
        Ok(net)
    }

    fn unreachable_bus(&self) -> Option<usize> {
        let n = self.buses.len();
        let mut adj = vec![Vec::new(); n];
        for l in &self.lines {
            adj[l.from].push(l.to);
            adj[l.to].push(l.from);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    /// Symmetric three-bus triangle: unit reactances and 100 MW limits on
    /// every line, two identical 100 MW generators at cost 50 on buses 1 and
    /// 2, and a 100 MW load on bus 3.
    pub fn canonical_three_bus() -> Network {
        let s = |x: &str| String::from(x);
        let line = |a: &str, b: &str| LineData { from: s(a), to: s(b), reactance: 1.0, limit: 100.0 };
        Network::new(
            vec![s("1"), s("2"), s("3")],
            vec![line("1", "2"), line("1", "3"), line("2", "3")],
            vec![
                GeneratorData { bus: s("1"), cost: 50.0, capacity: 100.0 },
                GeneratorData { bus: s("2"), cost: 50.0, capacity: 100.0 },
            ],
            vec![LoadData { bus: s("3"), demand: 100.0 }],
        )
        .expect("canonical network is valid")
    }

    pub fn buses(&self) -> &[String] {
        &self.buses
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    /// One generator per bus, implicit ones included.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Demand per bus.
    pub fn loads(&self) -> &[f64] {
        &self.loads
    }

    pub fn total_load(&self) -> f64 {
        self.loads.iter().sum()
    }

    pub fn total_capacity(&self) -> f64 {
        self.generators.iter().map(|g| g.capacity).sum()
    }

    pub fn line_name(&self, l: &Line) -> String {
        format!("f_{}_{}", self.buses[l.from], self.buses[l.to])
    }
}

// Declares the P block and sets the shared objective.
fn generation_block(net: &Network, model: &mut LpModel) -> Vec<VarId> {
    let p: Vec<VarId> = net
        .buses
        .iter()
        .zip(&net.generators)
        .map(|(b, g)| model.add_variable(format!("P_{b}"), 0.0, g.capacity, Role::Generation).expect("unique names"))
        .collect();
    let cost = p.iter().zip(&net.generators).filter(|(_, g)| g.declared).map(|(&v, g)| (v, g.cost));
    model.set_objective(ObjectiveSense::Minimize, cost, 0.0).expect("finite costs");
    p
}

// P, f and the nodal balance rows shared by DC-OPF and Network Flow.
fn flow_block(net: &Network, model: &mut LpModel) -> (Vec<VarId>, Vec<VarId>) {
    let p = generation_block(net, model);
    let f: Vec<VarId> = net
        .lines
        .iter()
        .map(|l| model.add_variable(net.line_name(l), -l.limit, l.limit, Role::Flow).expect("unique names"))
        .collect();
    for (i, bus) in net.buses.iter().enumerate() {
        let mut terms = vec![(p[i], 1.0)];
        for (k, l) in net.lines.iter().enumerate() {
            if l.to == i {
                terms.push((f[k], 1.0));
            } else if l.from == i {
                terms.push((f[k], -1.0));
            }
        }
        model
            .add_constraint(format!("balance_{bus}"), terms, RowSense::Eq, net.loads[i])
            .expect("declared variables");
    }
    (p, f)
}

/// DC optimal power flow over `(P, f, θ)` with free angles.
pub fn build_dcopf(net: &Network) -> LpModel {
    let mut model = LpModel::new(ObjectiveSense::Minimize);
    let (_, f) = flow_block(net, &mut model);
    let theta: Vec<VarId> = net
        .buses
        .iter()
        .map(|b| {
            model
                .add_variable(format!("theta_{b}"), f64::NEG_INFINITY, f64::INFINITY, Role::Angle)
                .expect("unique names")
        })
        .collect();
    for (k, l) in net.lines.iter().enumerate() {
        let s = 1.0 / l.reactance;
        let name = format!("angle_{}_{}", net.buses[l.from], net.buses[l.to]);
        model
            .add_constraint(name, [(theta[l.from], s), (theta[l.to], -s), (f[k], -1.0)], RowSense::Eq, 0.0)
            .expect("declared variables");
    }
    model
}

/// DC-OPF without the angle coupling: `(P, f)` with nodal balance only.
pub fn build_network_flow(net: &Network) -> LpModel {
    let mut model = LpModel::new(ObjectiveSense::Minimize);
    flow_block(net, &mut model);
    model
}

/// Generation only, with one system-wide supply/demand balance.
pub fn build_copper_plate(net: &Network) -> LpModel {
    let mut model = LpModel::new(ObjectiveSense::Minimize);
    let p = generation_block(net, &mut model);
    model
        .add_constraint("supply_demand", p.into_iter().map(|v| (v, 1.0)), RowSense::Eq, net.total_load())
        .expect("declared variables");
    model
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{solve, to_standard_form};

    fn s(x: &str) -> String {
        String::from(x)
    }

    #[test]
    fn canonical_models_have_expected_shape() {
        let net = Network::canonical_three_bus();
        let dc = build_dcopf(&net);
        assert_eq!(
            dc.var_names(),
            ["P_1", "P_2", "P_3", "f_1_2", "f_1_3", "f_2_3", "theta_1", "theta_2", "theta_3"]
        );
        assert_eq!(dc.constraints().len(), 6);
        assert_eq!(build_network_flow(&net).num_vars(), 6);
        assert_eq!(build_copper_plate(&net).num_vars(), 3);
        // bus 3 has the implicit zero-capacity generator
        assert_eq!(dc.variables()[2].upper, 0.0);
        assert_eq!(dc.objective().terms.len(), 2);
    }

    #[test]
    fn canonical_optimum_is_5000() {
        let net = Network::canonical_three_bus();
        for model in [build_dcopf(&net), build_network_flow(&net), build_copper_plate(&net)] {
            let r = solve(&to_standard_form(&model).unwrap());
            assert!(r.is_optimal());
            assert!((r.z_star - 5000.0).abs() < 1e-6);
        }
    }

    #[test]
    fn single_bus_without_lines() {
        let net = Network::new(
            vec![s("a")],
            vec![],
            vec![GeneratorData { bus: s("a"), cost: 1.0, capacity: 10.0 }],
            vec![LoadData { bus: s("a"), demand: 10.0 }],
        )
        .unwrap();
        let r = solve(&to_standard_form(&build_dcopf(&net)).unwrap());
        assert!((r.z_star - 10.0).abs() < 1e-9);
        assert!((r.x_star[0] - 10.0).abs() < 1e-9);
    }

    #[test]
    fn two_bus_angle_difference_is_reactance_times_flow() {
        // Eq. f = (θ1 − θ2)/x with x = 0.25 and f = 40 gives θ1 − θ2 = 10.
        let net = Network::new(
            vec![s("1"), s("2")],
            vec![LineData { from: s("1"), to: s("2"), reactance: 0.25, limit: 50.0 }],
            vec![GeneratorData { bus: s("1"), cost: 3.0, capacity: 100.0 }],
            vec![LoadData { bus: s("2"), demand: 40.0 }],
        )
        .unwrap();
        let m = build_dcopf(&net);
        let r = solve(&to_standard_form(&m).unwrap());
        assert!(r.is_optimal());
        let x = &r.x_star;
        assert!((x[2] - 40.0).abs() < 1e-9, "flow {}", x[2]);
        assert!((x[3] - x[4] - 10.0).abs() < 1e-9);
        assert!((r.z_star - 120.0).abs() < 1e-9);
    }

    #[test]
    fn validation_errors_have_distinct_codes() {
        let line = |a: &str, b: &str, x: f64| LineData { from: s(a), to: s(b), reactance: x, limit: 1.0 };
        let buses = || vec![s("1"), s("2"), s("3")];
        let cases = [
            Network::new(vec![], vec![], vec![], vec![]).unwrap_err(),
            Network::new(buses(), vec![line("1", "9", 1.0)], vec![], vec![]).unwrap_err(),
            Network::new(buses(), vec![line("1", "2", 0.0)], vec![], vec![]).unwrap_err(),
            Network::new(buses(), vec![line("1", "2", 1.0)], vec![], vec![]).unwrap_err(),
            Network::new(buses(), vec![line("1", "1", 1.0)], vec![], vec![]).unwrap_err(),
            Network::new(vec![s("1"), s("1")], vec![], vec![], vec![]).unwrap_err(),
        ];
        let codes: Vec<_> = cases.iter().map(|e| e.code()).collect();
        assert_eq!(
            codes,
            ["E_SCHEMA", "E_DANGLING_BUS", "E_REACTANCE", "E_DISCONNECTED", "E_SELF_LOOP", "E_DUPLICATE_BUS"]
        );
        let err = Network::new(
            buses(),
            vec![line("1", "2", 1.0), line("2", "3", 1.0), line("1", "2", 2.0)],
            vec![],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err.code(), "E_DUPLICATE_LINE");
    }

    #[test]
    fn copper_plate_overload_is_left_to_the_solver() {
        let net = Network::new(
            vec![s("1")],
            vec![],
            vec![GeneratorData { bus: s("1"), cost: 1.0, capacity: 5.0 }],
            vec![LoadData { bus: s("1"), demand: 10.0 }],
        )
        .unwrap();
        let m = build_copper_plate(&net);
        assert_eq!(solve(&to_standard_form(&m).unwrap()).status, crate::SolveStatus::Infeasible);
    }
}
