//! Explicit colorings from the constructive upper-bound arguments, transcribed
//! onto the labeling conventions of [`crate::families`].

use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{Color, VertexColoring};
use crate::families::{generate, thm4_graph, wheel2, FamilySpec, Thm4Layout};
use crate::graph::{all_pairs_distances, Graph, Vertex};

use super::ClaimError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColoringSpec {
    /// `n - 2` colors on any connected graph of diameter at least 3, built
    /// around a diametral geodesic (`thm1`).
    DiametralGeodesic,
    /// rvc colorings `c1`..`c4`, `c` of `W2_n` (`lemma3`).
    Wheel2Rvc { n: usize },
    /// srvc colorings of `W2_n`: `c1`..`c4` up to `n = 10`, `c*` beyond
    /// (`lemma4`).
    Wheel2Srvc { n: usize },
    /// `a`-color rvc coloring of `G(a, b)` (`thm4-rvc`).
    GluedRvc { a: usize, b: usize },
    /// `b`-color srvc coloring of `G(a, b)` (`thm4-srvc`).
    GluedSrvc { a: usize, b: usize },
}

/// Selector names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringKind {
    Thm1,
    Lemma3,
    Lemma4,
    Thm4Rvc,
    Thm4Srvc,
}

impl FromStr for ColoringKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "thm1" => ColoringKind::Thm1,
            "lemma3" => ColoringKind::Lemma3,
            "lemma4" => ColoringKind::Lemma4,
            "thm4-rvc" => ColoringKind::Thm4Rvc,
            "thm4-srvc" => ColoringKind::Thm4Srvc,
            other => {
                return Err(format!(
                    "unknown coloring {other:?} (expected thm1, lemma3, lemma4, thm4-rvc or thm4-srvc)"
                ))
            }
        })
    }
}

fn require_graph(g: &Graph, expected: &Graph, what: &str) -> Result<(), ClaimError> {
    if g == expected {
        Ok(())
    } else {
        Err(ClaimError::WrongGraph(format!("expected {what} under the standard labeling")))
    }
}

/// Materializes `spec` on `g`, which must be the graph the coloring is
/// defined for.
pub fn paper_coloring(spec: ColoringSpec, g: &Graph) -> Result<VertexColoring, ClaimError> {
    match spec {
        ColoringSpec::DiametralGeodesic => diametral_geodesic_coloring(g),
        ColoringSpec::Wheel2Rvc { n } => {
            require_graph(g, &wheel2_graph(n)?, &format!("W2_{n}"))?;
            wheel2_rvc_coloring(n)
        }
        ColoringSpec::Wheel2Srvc { n } => {
            require_graph(g, &wheel2_graph(n)?, &format!("W2_{n}"))?;
            wheel2_srvc_coloring(n)
        }
        ColoringSpec::GluedRvc { a, b } => {
            require_graph(g, &thm4_graph(a, b)?, &format!("G({a},{b})"))?;
            glued_rvc_coloring(a, b)
        }
        ColoringSpec::GluedSrvc { a, b } => {
            require_graph(g, &thm4_graph(a, b)?, &format!("G({a},{b})"))?;
            glued_srvc_coloring(a, b)
        }
    }
}

fn wheel2_graph(n: usize) -> Result<Graph, ClaimError> {
    Ok(generate(&FamilySpec::Wheel2 { n })?)
}

/// Takes the lexicographically smallest diametral pair `u < v` and the
/// lexicographically smallest geodesic `u = x_0, .., x_k = v` between them.
/// Colors: `u, x_{k-1} -> 1`, `x_1, v -> 2`, the other vertices get
/// `3..=n-2` in increasing id order.
pub fn diametral_geodesic_coloring(g: &Graph) -> Result<VertexColoring, ClaimError> {
    let dist = all_pairs_distances(g);
    let diam = dist
        .diameter()
        .ok_or_else(|| ClaimError::WrongGraph("graph is disconnected".into()))?;
    if diam < 3 {
        return Err(ClaimError::WrongGraph(format!("diameter {diam} is below 3")));
    }
    let n = g.order();
    let (u, v) = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .find(|&(u, v)| dist.get(u, v) == diam)
        .expect("diameter is attained");
    let mut path = vec![u];
    let mut x = u;
    while x != v {
        x = *g
            .neighbors(x)
            .iter()
            .find(|&&y| dist.get(y, v) + 1 == dist.get(x, v))
            .expect("some neighbor is closer to v");
        path.push(x);
    }
    let k = path.len() - 1;
    let mut colors: Vec<Color> = vec![0; n];
    colors[u] = 1;
    colors[path[k - 1]] = 1;
    colors[path[1]] = 2;
    colors[v] = 2;
    for (next, c) in (3..).zip(colors.iter_mut().filter(|c| **c == 0)) {
        *c = next;
    }
    Ok(VertexColoring::new(n - 2, colors).expect("colors lie in 1..=n-2"))
}

/// Builder over the `W2_n` labels.
struct Wheel2Paint {
    n: usize,
    colors: Vec<Color>,
}

impl Wheel2Paint {
    fn new(n: usize) -> Self {
        Wheel2Paint {
            n,
            colors: vec![0; 2 * n + 1],
        }
    }

    fn w(&mut self, c: Color) {
        self.colors[wheel2::W] = c;
    }

    fn u(&mut self, f: impl Fn(usize) -> Color) {
        for i in 1..=self.n {
            self.colors[wheel2::u(self.n, i)] = f(i);
        }
    }

    fn v(&mut self, f: impl Fn(usize) -> Color) {
        for i in 1..=self.n {
            self.colors[wheel2::v(self.n, i)] = f(i);
        }
    }

    fn finish(self, palette: usize) -> VertexColoring {
        VertexColoring::new(palette, self.colors).expect("every vertex painted within the palette")
    }
}

fn alternating(i: usize) -> Color {
    if i % 2 == 1 {
        1
    } else {
        2
    }
}

/// `c1` for `4 <= n <= 6`: `w -> 2`, `u_i -> 1`, `v_i -> 1` (odd `i`) or 2.
fn wheel2_c1(n: usize) -> VertexColoring {
    let mut p = Wheel2Paint::new(n);
    p.w(2);
    p.u(|_| 1);
    p.v(alternating);
    p.finish(2)
}

/// `c2` for `n = 7`.
fn wheel2_c2() -> VertexColoring {
    let mut p = Wheel2Paint::new(7);
    p.w(3);
    p.u(alternating);
    p.v(|i| match i {
        6 => 1,
        7 => 2,
        i if i % 2 == 1 => 3,
        _ => 2,
    });
    p.finish(3)
}

/// `c3` for `8 <= n <= 9`: `v_i` by `i mod 3`.
fn wheel2_c3(n: usize) -> VertexColoring {
    let mut p = Wheel2Paint::new(n);
    p.w(3);
    p.u(alternating);
    p.v(|i| match i % 3 {
        2 => 1,
        0 => 2,
        _ => 3,
    });
    p.finish(3)
}

/// `c4` for `n = 10`.
fn wheel2_c4() -> VertexColoring {
    let mut p = Wheel2Paint::new(10);
    p.w(3);
    p.u(|i| if i <= 5 { 1 } else { 2 });
    p.v(|i| match i {
        1 => 2,
        2..=4 => (i - 1) as Color,
        5..=7 => (i - 4) as Color,
        8 => 2,
        9 => 1,
        _ => 3,
    });
    p.finish(3)
}

/// `c` for `n >= 11`: `w -> 3`, `u_i` alternating 1/2, every `v_i -> 4`.
fn wheel2_c_large(n: usize) -> VertexColoring {
    let mut p = Wheel2Paint::new(n);
    p.w(3);
    p.u(alternating);
    p.v(|_| 4);
    p.finish(4)
}

/// `c*` for `n >= 11` with `k = ceil(n/5)`: `w -> k + 1`; `v_i -> 1, 2, 3`
/// for `i = 2, 3, 4 (mod 5)` and 1 otherwise; `u_i -> j + 1` on the block
/// `5j+1 ..= 5j+5`.
fn wheel2_c_star(n: usize) -> VertexColoring {
    let k = n.div_ceil(5);
    let mut p = Wheel2Paint::new(n);
    p.w((k + 1) as Color);
    p.v(|i| match i % 5 {
        2 => 1,
        3 => 2,
        4 => 3,
        _ => 1,
    });
    p.u(|i| ((i - 1) / 5 + 1) as Color);
    p.finish(k + 1)
}

fn single_color(n: usize) -> VertexColoring {
    VertexColoring::new(1, vec![1; 2 * n + 1]).expect("one color")
}

pub fn wheel2_rvc_coloring(n: usize) -> Result<VertexColoring, ClaimError> {
    Ok(match n {
        0..=2 => return Err(ClaimError::OutOfRange("two-layers wheel needs n >= 3".into())),
        // Diameter 2: any single color works.
        3 => single_color(3),
        4..=6 => wheel2_c1(n),
        7 => wheel2_c2(),
        8..=9 => wheel2_c3(n),
        10 => wheel2_c4(),
        _ => wheel2_c_large(n),
    })
}

pub fn wheel2_srvc_coloring(n: usize) -> Result<VertexColoring, ClaimError> {
    Ok(match n {
        0..=10 => return wheel2_rvc_coloring(n),
        _ => wheel2_c_star(n),
    })
}

/// `a` colors on `G(a, b)`: `v_i -> 1`, `u_i -> a` (odd `i`) or `a - 1`,
/// `s_i -> i` for `1 <= i <= a - 2`. `s_0` is pendant and gets 1.
pub fn glued_rvc_coloring(a: usize, b: usize) -> Result<VertexColoring, ClaimError> {
    let layout = Thm4Layout::new(a, b)?;
    let n = layout.n;
    let mut colors = vec![0 as Color; layout.order()];
    for i in 1..=n {
        colors[wheel2::v(n, i)] = 1;
        colors[wheel2::u(n, i)] = if i % 2 == 1 { a } else { a - 1 } as Color;
    }
    colors[layout.s(0)] = 1;
    for i in 1..=a - 2 {
        colors[layout.s(i)] = i as Color;
    }
    Ok(VertexColoring::new(a, colors).expect("colors lie in 1..=a"))
}

/// `b` colors on `G(a, b)`: `c*` on the two-layers wheel (which uses
/// `b - a + 3` colors) and `s_i -> b - a + 3 + i` for `0 <= i <= a - 3`.
pub fn glued_srvc_coloring(a: usize, b: usize) -> Result<VertexColoring, ClaimError> {
    let layout = Thm4Layout::new(a, b)?;
    let wheel = wheel2_srvc_coloring(layout.n)?;
    debug_assert_eq!(wheel.palette_size(), b - a + 3);
    let mut colors = wheel.colors().to_vec();
    colors.resize(layout.order(), 0);
    for i in 0..=a - 3 {
        colors[layout.s(i)] = (b - a + 3 + i) as Color;
    }
    Ok(VertexColoring::new(b, colors).expect("colors lie in 1..=b"))
}

/// Id labels for printing: `w`, `u_i`, `v_i` for a two-layers wheel and
/// additionally `s_i` for `G(a, b)`. `None` when `g` is neither.
pub fn structural_labels(g: &Graph) -> Option<Vec<String>> {
    let order = g.order();
    if order >= 7 && order % 2 == 1 {
        let n = (order - 1) / 2;
        if generate(&FamilySpec::Wheel2 { n }).ok().as_ref() == Some(g) {
            return Some((0..order).map(|v| wheel2::label(n, v)).collect());
        }
    }
    // order = 2n + a - 1 with n = 5(b - a + 2).
    for a in 5..order {
        let rest = order.checked_sub(a - 1)?;
        if rest % 2 != 0 {
            continue;
        }
        let n = rest / 2;
        if n < 10 || n % 5 != 0 {
            continue;
        }
        let b = n / 5 + a - 2;
        if let Ok(candidate) = thm4_graph(a, b) {
            if &candidate == g {
                let layout = Thm4Layout::new(a, b).ok()?;
                return Some((0..order).map(|v: Vertex| layout.label(v)).collect());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::{check_coloring, exists_rainbow_geodesic, Mode};
    use crate::graph::count_geodesics;
    use crate::claims::formulas::{formula_wheel2_rvc, formula_wheel2_srvc};

    #[test]
    fn diametral_geodesic_on_p5() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        let c = diametral_geodesic_coloring(&p5).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 1, 2]);
        assert_eq!(c.palette_size(), 3);
        assert!(check_coloring(&p5, &c, Mode::Srvc).unwrap().valid);
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert!(diametral_geodesic_coloring(&c5).is_err());
    }

    #[test]
    fn c_star_on_w2_12() {
        let c = wheel2_srvc_coloring(12).unwrap();
        assert_eq!(c.palette_size(), 4);
        assert_eq!(c.color(wheel2::W), Some(4));
        let v: Vec<_> = (1..=12).map(|i| c.color(wheel2::v(12, i)).unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 1, 1, 1, 2, 3, 1, 1, 1]);
        let u: Vec<_> = (1..=12).map(|i| c.color(wheel2::u(12, i)).unwrap()).collect();
        assert_eq!(u, vec![1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn c2_and_c4_transcriptions() {
        let c2 = wheel2_c2();
        let v: Vec<_> = (1..=7).map(|i| c2.color(wheel2::v(7, i)).unwrap()).collect();
        assert_eq!(v, vec![3, 2, 3, 2, 3, 1, 2]);
        let c4 = wheel2_c4();
        let v: Vec<_> = (1..=10).map(|i| c4.color(wheel2::v(10, i)).unwrap()).collect();
        assert_eq!(v, vec![2, 1, 2, 3, 1, 2, 3, 2, 1, 3]);
    }

    #[test]
    fn wheel2_colorings_are_valid_and_tight() {
        for n in 3..=20 {
            let g = wheel2_graph(n).unwrap();
            let rvc = paper_coloring(ColoringSpec::Wheel2Rvc { n }, &g).unwrap();
            assert_eq!(rvc.distinct_colors(), formula_wheel2_rvc(n).unwrap().value, "n = {n}");
            assert!(check_coloring(&g, &rvc, Mode::Rvc).unwrap().valid, "rvc n = {n}");
            let srvc = paper_coloring(ColoringSpec::Wheel2Srvc { n }, &g).unwrap();
            assert_eq!(srvc.distinct_colors(), formula_wheel2_srvc(n).unwrap().value, "n = {n}");
            if n <= 10 {
                assert!(check_coloring(&g, &srvc, Mode::Srvc).unwrap().valid, "srvc n = {n}");
            }
        }
    }

    // v_{5j}, v_{5j+1} and v_{5j+2} share color 1 on the outer cycle, so a
    // pair at outer distance 3 across them has a single non-rainbow geodesic.
    #[test]
    fn large_srvc_coloring_has_monochromatic_outer_geodesic() {
        for n in 11..=20 {
            let g = wheel2_graph(n).unwrap();
            let c = wheel2_srvc_coloring(n).unwrap();
            assert!(!check_coloring(&g, &c, Mode::Srvc).unwrap().valid, "n = {n}");
            let (x, y) = (wheel2::v(n, 4), wheel2::v(n, 7));
            assert_eq!(count_geodesics(&g, x, y).unwrap(), 1);
            assert!(!exists_rainbow_geodesic(&g, &c, x, y).unwrap());
        }
    }

    #[test]
    fn glued_colorings() {
        let g = thm4_graph(5, 6).unwrap();
        let c = paper_coloring(ColoringSpec::GluedSrvc { a: 5, b: 6 }, &g).unwrap();
        let layout = Thm4Layout::new(5, 6).unwrap();
        let s: Vec<_> = (0..=2).map(|i| c.color(layout.s(i)).unwrap()).collect();
        assert_eq!(s, vec![4, 5, 6]);
        assert_eq!(c.distinct_colors(), 6);
        let c = paper_coloring(ColoringSpec::GluedRvc { a: 5, b: 6 }, &g).unwrap();
        assert_eq!(c.distinct_colors(), 5);
    }

    #[test]
    fn wrong_graph_is_rejected() {
        let g = wheel2_graph(8).unwrap();
        assert!(paper_coloring(ColoringSpec::Wheel2Rvc { n: 9 }, &g).is_err());
        assert!(paper_coloring(ColoringSpec::GluedRvc { a: 5, b: 6 }, &g).is_err());
    }

    #[test]
    fn labels() {
        let g = wheel2_graph(4).unwrap();
        let l = structural_labels(&g).unwrap();
        assert_eq!(l[0], "w");
        assert_eq!(l[4], "u_4");
        assert_eq!(l[5], "v_1");
        let g = thm4_graph(5, 7).unwrap();
        let l = structural_labels(&g).unwrap();
        assert_eq!(l.last().unwrap(), "s_2");
        assert!(structural_labels(&generate(&FamilySpec::Path { n: 7 }).unwrap()).is_none());
    }
}
