//! Inequality-constrained problems from the Michalewicz–Schoenauer test suite.

use std::f64::consts::PI;

use crate::problem::{BoxBounds, Problem, Sense};

use super::{guarded_div, BenchmarkEntry, LocationClass};

const SOURCE: &str = "Michalewicz & Schoenauer, Evolutionary Computation 4(1), 1996";

fn bounds(lower: Vec<f64>, upper: Vec<f64>) -> BoxBounds {
    BoxBounds::new(lower, upper).expect("registry bounds are valid")
}

pub(super) fn g01() -> BenchmarkEntry {
    let mut upper = vec![1.0; 13];
    upper[9] = 100.0;
    upper[10] = 100.0;
    upper[11] = 100.0;
    let problem = Problem::new("g01", bounds(vec![0.0; 13], upper), Sense::Minimize, |x| {
        5.0 * x[..4].iter().sum::<f64>()
            - 5.0 * x[..4].iter().map(|v| v * v).sum::<f64>()
            - x[4..13].iter().sum::<f64>()
    })
    .with_constraint(|x| 2.0 * x[0] + 2.0 * x[1] + x[9] + x[10] - 10.0)
    .with_constraint(|x| 2.0 * x[0] + 2.0 * x[2] + x[9] + x[11] - 10.0)
    .with_constraint(|x| 2.0 * x[1] + 2.0 * x[2] + x[10] + x[11] - 10.0)
    .with_constraint(|x| -8.0 * x[0] + x[9])
    .with_constraint(|x| -8.0 * x[1] + x[10])
    .with_constraint(|x| -8.0 * x[2] + x[11])
    .with_constraint(|x| -2.0 * x[3] - x[4] + x[9])
    .with_constraint(|x| -2.0 * x[5] - x[6] + x[10])
    .with_constraint(|x| -2.0 * x[7] - x[8] + x[11])
    .with_known_best(-15.0, Some(vec![1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0, 3.0, 1.0]));
    BenchmarkEntry { problem, location: LocationClass::OnBoundary, source: SOURCE }
}

pub(super) fn g02() -> BenchmarkEntry {
    const N: usize = 20;
    let problem = Problem::new("g02", bounds(vec![0.0; N], vec![10.0; N]), Sense::Maximize, |x| {
        let (mut sum4, mut prod2, mut weighted) = (0.0, 1.0, 0.0);
        for (i, &v) in x.iter().enumerate() {
            let c = v.cos();
            sum4 += c.powi(4);
            prod2 *= c * c;
            weighted += (i + 1) as f64 * v * v;
        }
        guarded_div((sum4 - 2.0 * prod2).abs(), weighted.sqrt())
    })
    .with_constraint(|x| 0.75 - x.iter().product::<f64>())
    .with_constraint(|x| x.iter().sum::<f64>() - 7.5 * N as f64)
    .with_known_best(
        0.80362,
        Some(vec![
            3.16246061572185,
            3.12833142812967,
            3.09479212988791,
            3.06145059523469,
            3.02792915885555,
            2.99382606701730,
            2.95866871765285,
            2.92184227312450,
            0.49482511456933,
            0.48835711005490,
            0.48231642711865,
            0.47664475092742,
            0.47129550835493,
            0.46623099264167,
            0.46142004984199,
            0.45683664767217,
            0.45245876903267,
            0.44826762241853,
            0.44424700958760,
            0.44038285956317,
        ]),
    );
    BenchmarkEntry { problem, location: LocationClass::NearBoundary, source: SOURCE }
}

pub(super) fn g04() -> BenchmarkEntry {
    fn a(x: &[f64]) -> f64 {
        85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4]
    }
    fn b(x: &[f64]) -> f64 {
        80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2]
    }
    fn c(x: &[f64]) -> f64 {
        9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3]
    }
    let problem = Problem::new(
        "g04",
        bounds(vec![78.0, 33.0, 27.0, 27.0, 27.0], vec![102.0, 45.0, 45.0, 45.0, 45.0]),
        Sense::Minimize,
        |x| 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141,
    )
    .with_constraint(|x| a(x) - 92.0)
    .with_constraint(|x| -a(x))
    .with_constraint(|x| b(x) - 110.0)
    .with_constraint(|x| 90.0 - b(x))
    .with_constraint(|x| c(x) - 25.0)
    .with_constraint(|x| 20.0 - c(x))
    .with_known_best(-30665.54, Some(vec![78.0, 33.0, 29.995_256_025_681_6, 45.0, 36.775_812_905_788_21]));
    BenchmarkEntry { problem, location: LocationClass::OnBoundary, source: SOURCE }
}

pub(super) fn g06() -> BenchmarkEntry {
    let problem = Problem::new("g06", bounds(vec![13.0, 0.0], vec![100.0, 100.0]), Sense::Minimize, |x| {
        (x[0] - 10.0).powi(3) + (x[1] - 20.0).powi(3)
    })
    .with_constraint(|x| -(x[0] - 5.0).powi(2) - (x[1] - 5.0).powi(2) + 100.0)
    .with_constraint(|x| (x[0] - 6.0).powi(2) + (x[1] - 5.0).powi(2) - 82.81)
    .with_known_best(-6961.814, Some(vec![14.095, 0.842_960_789_215_479_6]));
    BenchmarkEntry { problem, location: LocationClass::NearBoundary, source: SOURCE }
}

pub(super) fn g07() -> BenchmarkEntry {
    let problem = Problem::new("g07", bounds(vec![-10.0; 10], vec![10.0; 10]), Sense::Minimize, |x| {
        x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1]
            + (x[2] - 10.0).powi(2)
            + 4.0 * (x[3] - 5.0).powi(2)
            + (x[4] - 3.0).powi(2)
            + 2.0 * (x[5] - 1.0).powi(2)
            + 5.0 * x[6] * x[6]
            + 7.0 * (x[7] - 11.0).powi(2)
            + 2.0 * (x[8] - 10.0).powi(2)
            + (x[9] - 7.0).powi(2)
            + 45.0
    })
    .with_constraint(|x| -105.0 + 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7])
    .with_constraint(|x| 10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7])
    .with_constraint(|x| -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0)
    .with_constraint(|x| {
        3.0 * (x[0] - 2.0).powi(2) + 4.0 * (x[1] - 3.0).powi(2) + 2.0 * x[2] * x[2] - 7.0 * x[3] - 120.0
    })
    .with_constraint(|x| 5.0 * x[0] * x[0] + 8.0 * x[1] + (x[2] - 6.0).powi(2) - 2.0 * x[3] - 40.0)
    .with_constraint(|x| x[0] * x[0] + 2.0 * (x[1] - 2.0).powi(2) - 2.0 * x[0] * x[1] + 14.0 * x[4] - 6.0 * x[5])
    .with_constraint(|x| 0.5 * (x[0] - 8.0).powi(2) + 2.0 * (x[1] - 4.0).powi(2) + 3.0 * x[4] * x[4] - x[5] - 30.0)
    .with_constraint(|x| -3.0 * x[0] + 6.0 * x[1] + 12.0 * (x[8] - 8.0).powi(2) - 7.0 * x[9])
    .with_known_best(
        24.306,
        Some(vec![
            2.1719963415767176,
            2.3636830412533594,
            8.773925739110602,
            5.095984437624457,
            0.9906547565024139,
            1.430573928559521,
            1.3216441539222867,
            9.82872576546497,
            8.280091589131548,
            8.375926647779602,
        ]),
    );
    BenchmarkEntry { problem, location: LocationClass::NearBoundary, source: SOURCE }
}

pub(super) fn g08() -> BenchmarkEntry {
    let problem = Problem::new("g08", bounds(vec![0.0, 0.0], vec![10.0, 10.0]), Sense::Maximize, |x| {
        let num = (2.0 * PI * x[0]).sin().powi(3) * (2.0 * PI * x[1]).sin();
        guarded_div(num, x[0].powi(3) * (x[0] + x[1]))
    })
    .with_constraint(|x| x[0] * x[0] - x[1] + 1.0)
    .with_constraint(|x| 1.0 - x[0] + (x[1] - 4.0).powi(2))
    .with_known_best(0.095825, Some(vec![1.227_971_352_607_526, 4.245_373_366_122_749]));
    BenchmarkEntry { problem, location: LocationClass::Interior, source: SOURCE }
}

pub(super) fn g09() -> BenchmarkEntry {
    let problem = Problem::new("g09", bounds(vec![-10.0; 7], vec![10.0; 7]), Sense::Minimize, |x| {
        (x[0] - 10.0).powi(2)
            + 5.0 * (x[1] - 12.0).powi(2)
            + x[2].powi(4)
            + 3.0 * (x[3] - 11.0).powi(2)
            + 10.0 * x[4].powi(6)
            + 7.0 * x[5] * x[5]
            + x[6].powi(4)
            - 4.0 * x[5] * x[6]
            - 10.0 * x[5]
            - 8.0 * x[6]
    })
    .with_constraint(|x| -127.0 + 2.0 * x[0] * x[0] + 3.0 * x[1].powi(4) + x[2] + 4.0 * x[3] * x[3] + 5.0 * x[4])
    .with_constraint(|x| -282.0 + 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] + x[3] - x[4])
    .with_constraint(|x| -196.0 + 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] - 8.0 * x[6])
    .with_constraint(|x| {
        4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] + 2.0 * x[2] * x[2] + 5.0 * x[5] - 11.0 * x[6]
    })
    .with_known_best(
        680.630,
        Some(vec![
            2.330_499_351_474_052,
            1.951_372_368_471_146,
            -0.477_541_399_510_615_8,
            4.365_726_249_236_259,
            -0.624_486_959_100_399,
            1.038_130_994_109_622,
            1.594_226_678_067_152,
        ]),
    );
    BenchmarkEntry { problem, location: LocationClass::Interior, source: SOURCE }
}

pub(super) fn g10() -> BenchmarkEntry {
    let problem = Problem::new(
        "g10",
        bounds(
            vec![100.0, 1000.0, 1000.0, 10.0, 10.0, 10.0, 10.0, 10.0],
            vec![10000.0, 10000.0, 10000.0, 1000.0, 1000.0, 1000.0, 1000.0, 1000.0],
        ),
        Sense::Minimize,
        |x| x[0] + x[1] + x[2],
    )
    .with_constraint(|x| -1.0 + 0.0025 * (x[3] + x[5]))
    .with_constraint(|x| -1.0 + 0.0025 * (x[4] + x[6] - x[3]))
    .with_constraint(|x| -1.0 + 0.01 * (x[7] - x[4]))
    .with_constraint(|x| -x[0] * x[5] + 833.33252 * x[3] + 100.0 * x[0] - 83333.333)
    .with_constraint(|x| -x[1] * x[6] + 1250.0 * x[4] + x[1] * x[3] - 1250.0 * x[3])
    .with_constraint(|x| -x[2] * x[7] + 1_250_000.0 + x[2] * x[4] - 2500.0 * x[4])
    .with_known_best(
        7049.248,
        Some(vec![
            579.306_685_017_979_6,
            1_359.970_678_079_356,
            5_109.970_657_432_336,
            182.017_699_630_615_3,
            295.601_173_702_746_8,
            217.982_300_369_384_6,
            286.416_525_927_868_5,
            395.601_173_702_746_7,
        ]),
    );
    BenchmarkEntry { problem, location: LocationClass::Interior, source: SOURCE }
}
