//! Exhaustive enumeration of degree-one places.

use std::collections::BTreeMap;

use super::{CurveError, CurveFamily, CurveModel, Place, PlaceCensus, PlaceClass, PlaceId};
use crate::gf::{FieldElement, FieldSpec};

/// All affine `(x, y)` over `field` with `y^{q̄+1} = x^{q̄} + x`, by brute
/// force over `field × field`.
pub fn hermitian_affine_points<'f>(
    qbar: u64,
    field: &'f FieldSpec,
) -> Result<Vec<(FieldElement<'f>, FieldElement<'f>)>, CurveError> {
    check_char_power(qbar, field)?;
    let mut out = Vec::new();
    for x in field.elements() {
        let rhs = x.pow(qbar) + x;
        for y in field.elements() {
            if y.pow(qbar + 1) == rhs {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

fn check_char_power(qbar: u64, field: &FieldSpec) -> Result<(), CurveError> {
    let p = field.characteristic() as u64;
    let mut m = qbar;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
    }
    if m != 1 || qbar < 2 {
        return Err(CurveError::InvalidParameter(format!(
            "q̄ = {qbar} is not a power of the characteristic {p}"
        )));
    }
    Ok(())
}

/// Intersection multiplicity at `(x0, y0)` of the Hermitian curve
/// `y^{q̄+1} = x^{q̄} + x` with its tangent line there.
///
/// Since `∂/∂x = -1` never vanishes, `s = y - y0` is a local parameter and
/// the multiplicity is the order at `s = 0` of the curve equation restricted
/// to the line `x = x0 + c s`, `c = (q̄+1) y0^{q̄}`.
pub fn hermitian_tangent_contact(qbar: u64, x0: FieldElement<'_>, y0: FieldElement<'_>) -> Option<u64> {
    let f = x0.field();
    let c = f.from_int((qbar + 1) as i64) * y0.pow(qbar);
    let line_x = vec![x0, c];
    let line_y = vec![y0, f.one()];
    let lhs = poly_pow(&line_y, qbar + 1);
    let mut rhs = poly_pow(&line_x, qbar);
    poly_add_assign(&mut rhs, &line_x);
    let zero = f.zero();
    let len = lhs.len().max(rhs.len());
    (0..len)
        .map(|i| *lhs.get(i).unwrap_or(&zero) - *rhs.get(i).unwrap_or(&zero))
        .position(|coef| !coef.is_zero())
        .map(|i| i as u64)
}

fn poly_mul<'f>(a: &[FieldElement<'f>], b: &[FieldElement<'f>]) -> Vec<FieldElement<'f>> {
    let f = a[0].field();
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn poly_pow<'f>(a: &[FieldElement<'f>], e: u64) -> Vec<FieldElement<'f>> {
    let mut out = vec![a[0].field().one()];
    for _ in 0..e {
        out = poly_mul(&out, a);
    }
    out
}

fn poly_add_assign<'f>(acc: &mut Vec<FieldElement<'f>>, b: &[FieldElement<'f>]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), b[0].field().zero());
    }
    for (slot, &y) in acc.iter_mut().zip(b) {
        *slot = *slot + y;
    }
}

enum GkFiber<'f> {
    /// Kummer generator value `u` at an unramified point.
    Unramified(FieldElement<'f>),
    Ramified,
}

// u = y (x^{q̄²-1} - 1)/(x^{q̄-1} + 1). When the denominator vanishes the
// point has y = 0 and num = 0, and v(u) = 1 + (q̄+1) - (q̄+1) = 1.
fn classify_gk<'f>(
    qbar: u64,
    x: FieldElement<'f>,
    y: FieldElement<'f>,
) -> Result<GkFiber<'f>, CurveError> {
    let one = x.field().one();
    let num = x.pow(qbar * qbar - 1) - one;
    let den = x.pow(qbar - 1) + one;
    if den.is_zero() {
        if !y.is_zero() || !num.is_zero() {
            return Err(CurveError::InconsistentFiber(
                PlaceId::point(&[x.code(), y.code()]),
                "denominator of u vanishes off y = 0".into(),
            ));
        }
        return Ok(GkFiber::Ramified);
    }
    let top = y * num;
    if top.is_zero() {
        Ok(GkFiber::Ramified)
    } else {
        Ok(GkFiber::Unramified(top / den))
    }
}

fn hermitian_points_by_roots<'f>(
    qbar: u64,
    field: &'f FieldSpec,
) -> impl Iterator<Item = (FieldElement<'f>, FieldElement<'f>)> + 'f {
    field.elements().flat_map(move |x| {
        let rhs = x.pow(qbar) + x;
        field.nth_roots(rhs, qbar + 1).into_iter().map(move |y| (x, y))
    })
}

pub(super) fn gk_census(curve: &CurveModel) -> Result<PlaceCensus, CurveError> {
    let CurveFamily::Gk { qbar } = curve.family() else {
        unreachable!("gk_census on a non-GK curve")
    };
    let field = curve.field();
    let d = qbar * qbar - qbar + 1;
    let mut census = PlaceCensus::default();
    let mut base_total = 1;

    for (x, y) in hermitian_points_by_roots(qbar, field) {
        base_total += 1;
        match classify_gk(qbar, x, y)? {
            GkFiber::Ramified => census.record(Place {
                id: PlaceId::point(&[x.code(), y.code()]),
                class: PlaceClass::ZeroOfCoverFunction,
                coords: Some(vec![x.code(), y.code()]),
                ramification: d,
                degree: 1,
            }),
            GkFiber::Unramified(u) => {
                let roots = field.count_nth_roots(u, d);
                match roots {
                    0 => census.inert_fibers += 1,
                    r if r == d => {
                        census.split_fibers += 1;
                        record_split_fiber(&mut census, field, &[x, y], u, d);
                    }
                    _ => {
                        census.condition_violations += 1;
                        census.record_split_bulk(roots);
                    }
                }
            }
        }
    }

    census.record(Place {
        id: PlaceId::named("P0"),
        class: PlaceClass::Infinite,
        coords: None,
        ramification: d,
        degree: 1,
    });
    census.base_total = Some(base_total);
    Ok(census)
}

// Records the places over an unramified base point whose fiber splits; only
// materializes them while the sample budget lasts.
fn record_split_fiber<'f>(
    census: &mut PlaceCensus,
    field: &'f FieldSpec,
    base: &[FieldElement<'f>],
    u: FieldElement<'f>,
    degree: u64,
) {
    if census.count(PlaceClass::AffineSplit) as usize >= super::SPLIT_SAMPLE_LIMIT {
        census.record_split_bulk(degree);
        return;
    }
    for z in field.nth_roots(u, degree) {
        let mut coords: Vec<u32> = base.iter().map(|e| e.code()).collect();
        coords.push(z.code());
        census.record(Place {
            id: PlaceId::point(&coords),
            class: PlaceClass::AffineSplit,
            coords: Some(coords),
            ramification: 1,
            degree: 1,
        });
    }
}

/// Histogram of tangent-line contact orders at the base points of all
/// completely split unramified fibers of the GK curve. The contact order is
/// the valuation of a linear function in `1, x, y`, hence a `(D,P)`-order at
/// every place above the point.
pub fn gk_unramified_contact_orders(curve: &CurveModel) -> Result<BTreeMap<u64, u64>, CurveError> {
    let CurveFamily::Gk { qbar } = curve.family() else {
        return Err(CurveError::InvalidParameter("contact orders are defined for GK only".into()));
    };
    let field = curve.field();
    let d = qbar * qbar - qbar + 1;
    let mut hist = BTreeMap::new();
    for (x, y) in hermitian_points_by_roots(qbar, field) {
        if let GkFiber::Unramified(u) = classify_gk(qbar, x, y)? {
            if field.count_nth_roots(u, d) == d {
                let c = hermitian_tangent_contact(qbar, x, y).unwrap_or(0);
                *hist.entry(c).or_insert(0) += 1;
            }
        }
    }
    Ok(hist)
}

pub fn count_gk_places(qbar: u64) -> Result<PlaceCensus, CurveError> {
    CurveModel::gk(qbar)?.census()
}

pub(super) fn gsx49_census(curve: &CurveModel) -> Result<PlaceCensus, CurveError> {
    let field = curve.field();
    let one = field.one();
    let minus_one = -one;
    let mut census = PlaceCensus::default();

    for t in field.elements() {
        if t.is_zero() || t == minus_one {
            continue;
        }
        let a = t * (t + one).pow(6);
        match field.count_nth_roots(a, 16) {
            0 => census.inert_fibers += 1,
            16 => {
                census.split_fibers += 1;
                record_split_fiber(&mut census, field, &[t], a, 16);
            }
            r => {
                census.condition_violations += 1;
                census.record_split_bulk(r);
            }
        }
    }

    // Fibers over t = 0, -1, ∞, read off the divisors of z and t + 1.
    let special = [
        ("Pbar_0", Some(vec![0, 0]), 16, PlaceClass::AffineRamified),
        ("Pbar_1", Some(vec![minus_one.code(), 0]), 8, PlaceClass::AffineRamified),
        ("Pbar_2", Some(vec![minus_one.code(), 0]), 8, PlaceClass::AffineRamified),
        ("Pbar_inf", None, 16, PlaceClass::Infinite),
    ];
    for (name, coords, e, class) in special {
        census.record(Place { id: PlaceId::named(name), class, coords, ramification: e, degree: 1 });
    }
    Ok(census)
}

pub fn count_gsx49_places() -> Result<PlaceCensus, CurveError> {
    CurveModel::gsx49()?.census()
}

pub(super) fn fk_census(curve: &CurveModel) -> Result<PlaceCensus, CurveError> {
    let CurveFamily::Fk { q } = curve.family() else {
        unreachable!("fk_census on a non-FK curve")
    };
    let field = curve.field();
    let w = curve.w().expect("FK curves carry w");
    let n = (q + 1) / 3;
    let half = field.degree() / 2;
    let three = field.from_int(3);
    let minus_one = -field.one();
    let mut census = PlaceCensus::default();
    let mut base_total = 0;

    for alpha in field.elements() {
        let rhs = minus_one - alpha.pow(n);
        for beta in field.nth_roots(rhs, n) {
            base_total += 1;
            let ab = alpha * beta;
            if ab.is_zero() {
                census.record(Place {
                    id: PlaceId::point(&[alpha.code(), beta.code()]),
                    class: PlaceClass::ZeroOfCoverFunction,
                    coords: Some(vec![alpha.code(), beta.code()]),
                    ramification: 3,
                    degree: 1,
                });
                continue;
            }
            let u = w * ab;
            let roots = field.count_nth_roots(u, 3);
            let in_subfield = (three * ab.pow(n)).is_in_subfield(half)?;
            if roots == 3 && in_subfield {
                census.split_fibers += 1;
                record_split_fiber(&mut census, field, &[alpha, beta], u, 3);
            } else {
                census.condition_violations += 1;
                if roots == 0 {
                    census.inert_fibers += 1;
                } else {
                    census.record_split_bulk(roots);
                }
            }
        }
    }

    for slope in field.nth_roots(minus_one, n) {
        base_total += 1;
        census.record(Place {
            id: PlaceId::at_infinity(slope.code()),
            class: PlaceClass::Infinite,
            coords: None,
            ramification: 3,
            degree: 1,
        });
    }
    census.base_total = Some(base_total);
    Ok(census)
}

pub fn count_fk_places(q: u64) -> Result<PlaceCensus, CurveError> {
    CurveModel::fk(q)?.census()
}
