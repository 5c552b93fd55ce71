use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::{AbHom, Element, FgAbGroup};
use super::matrix::IntegerMatrix;

/// One cyclic summand of `Hom(g, h)`: the map sending Smith generator
/// `source` of `g` to `value` times Smith generator `target` of `h`.
#[derive(Clone, Debug)]
struct Slot {
    source: usize,
    target: usize,
    value: BigInt,
    /// Modulus of row `target` in Smith coordinates of `h` (0 if free).
    target_modulus: BigInt,
    /// Order of the summand (0 if free).
    order: BigInt,
}

/// The group `Hom(g, h)` presented as a direct sum of cyclic groups, with
/// mutually inverse translations between its elements and maps `g → h`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: FgAbGroup,
    target: FgAbGroup,
    group: FgAbGroup,
    slots: Vec<Slot>,
}

impl HomGroup {
    pub fn new(g: &FgAbGroup, h: &FgAbGroup) -> Self {
        let dg = g.smith().row_moduli();
        let dh = h.smith().row_moduli();
        let mut slots = Vec::new();
        for (i, d) in dg.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            for (j, e) in dh.iter().enumerate() {
                if e.is_one() {
                    continue;
                }
                let slot = match (d.is_zero(), e.is_zero()) {
                    // Z/d → Z is zero
                    (false, true) => continue,
                    (true, _) => Slot {
                        source: i,
                        target: j,
                        value: BigInt::one(),
                        target_modulus: e.clone(),
                        order: e.clone(),
                    },
                    (false, false) => {
                        let gcd = d.gcd(e);
                        Slot {
                            source: i,
                            target: j,
                            value: e / &gcd,
                            target_modulus: e.clone(),
                            order: gcd,
                        }
                    }
                };
                slots.push(slot);
            }
        }
        let orders: Vec<BigInt> = slots.iter().map(|s| s.order.clone()).collect();
        HomGroup {
            source: g.clone(),
            target: h.clone(),
            group: FgAbGroup::from_invariants(&orders),
            slots,
        }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// The map `source → target` named by an element of [`HomGroup::group`].
    pub fn element_to_hom(&self, c: &[BigInt]) -> AbHom {
        assert_eq!(c.len(), self.slots.len(), "element has wrong length");
        let sg = self.source.smith();
        let sh = self.target.smith();
        let mut local =
            IntegerMatrix::zeros(self.target.generator_count(), self.source.generator_count());
        for (slot, ck) in self.slots.iter().zip(c) {
            if !ck.is_zero() {
                local.set(slot.target, slot.source, ck * &slot.value);
            }
        }
        let m = &(&sh.u_inv * &local) * &sg.u;
        AbHom::new_unchecked(self.source.clone(), self.target.clone(), m)
    }

    /// The element of [`HomGroup::group`] naming a map `source → target`.
    pub fn hom_to_element(&self, f: &AbHom) -> Element {
        assert!(
            f.source() == &self.source && f.target() == &self.target,
            "map between other presentations"
        );
        self.matrix_to_element(f.matrix())
    }

    /// As [`HomGroup::hom_to_element`], for a raw matrix on the same generators.
    pub fn matrix_to_element(&self, m: &IntegerMatrix) -> Element {
        let sg = self.source.smith();
        let sh = self.target.smith();
        let local = &(&sh.u * m) * &sg.u_inv;
        self.slots
            .iter()
            .map(|slot| {
                let mut v = local.get(slot.target, slot.source).clone();
                if !slot.target_modulus.is_zero() {
                    v = v.mod_floor(&slot.target_modulus);
                }
                let c = v / &slot.value;
                if slot.order.is_zero() {
                    c
                } else {
                    c.mod_floor(&slot.order)
                }
            })
            .collect()
    }
}
