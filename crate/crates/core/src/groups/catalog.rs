//! Small groups with fixed element orderings.

use super::FiniteGroup;

/// `Z/n`, element `i` is the residue `i`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let elems: Vec<usize> = (0..n).collect();
    FiniteGroup::from_elements(&elems, |a, b| (a + b) % n).expect("cyclic group")
}

/// `Z/2 x Z/2`.
pub fn klein4() -> FiniteGroup {
    cyclic(2).direct_product(&cyclic(2))
}

/// Symmetric group on `k` letters; permutations listed in lexicographic
/// order of their image tuples, composed as `(p q)(x) = p(q(x))`.
pub fn symmetric(k: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(&mut (0..k).collect(), 0, &mut perms);
    perms.sort();
    FiniteGroup::from_elements(&perms, |p, q| q.iter().map(|&x| p[x]).collect())
        .expect("symmetric group")
}

fn permutations(cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in start..cur.len() {
        cur.swap(start, i);
        permutations(cur, start + 1, out);
        cur.swap(start, i);
    }
}

/// `S_3`: elements `e, (12), (01), (012), (021), (02)` in image-tuple order
/// `[0,1,2], [0,2,1], [1,0,2], [1,2,0], [2,0,1], [2,1,0]`.
pub fn symmetric3() -> FiniteGroup {
    symmetric(3)
}

/// Dihedral group of order `2m`; element `i + m*j` is `r^i s^j`.
pub fn dihedral(m: usize) -> FiniteGroup {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    FiniteGroup::from_elements(&elems, |&(i, j), &(k, l)| {
        let k = if j == 0 { k } else { (m - k) % m };
        ((i + k) % m, (j + l) % 2)
    })
    .expect("dihedral group")
}

/// Quaternion group, elements `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> FiniteGroup {
    let unit = |s: i32, axis: usize| {
        let mut q = [0i32; 4];
        q[axis] = s;
        q
    };
    let elems: Vec<[i32; 4]> = (0..4)
        .flat_map(|axis| [unit(1, axis), unit(-1, axis)])
        .collect();
    FiniteGroup::from_elements(&elems, |a, b| {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    })
    .expect("quaternion group")
}

/// The test corpus: `Z2, Z3, Z4, Z2xZ2, Z6, S3, D4, Q8`.
pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", klein4()),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
    ]
}

/// Look up a catalog group by name (`Z<n>`, `Z2xZ2`, `S3`, `S4`, `D<m>`, `Q8`, `1`).
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    match name {
        "1" => return Some(FiniteGroup::trivial()),
        "Z2xZ2" | "V4" => return Some(klein4()),
        "Q8" => return Some(quaternion()),
        _ => {}
    }
    let (head, tail) = name.split_at(1);
    let k: usize = tail.parse().ok().filter(|&k| k >= 1)?;
    match head {
        "Z" => Some(cyclic(k)),
        "S" if k <= 5 => Some(symmetric(k)),
        "D" if k >= 2 => Some(dihedral(k)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let orders: Vec<usize> = corpus().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![2, 3, 4, 4, 6, 6, 8, 8]);
    }

    #[test]
    fn s3_has_three_involutions() {
        let s3 = symmetric3();
        let involutions: Vec<usize> = s3
            .elements()
            .filter(|&x| s3.element_order(x) == 2)
            .collect();
        assert_eq!(involutions, vec![1, 2, 5]);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn q8_and_d4_differ() {
        let q8 = quaternion();
        let d4 = dihedral(4);
        let involutions =
            |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&q8), 1);
        assert_eq!(involutions(&d4), 5);
        assert_eq!(q8.center(), vec![0, 1]);
        assert_eq!(q8.mul(2, 4), 6); // i j = k
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("Z5").unwrap().order(), 5);
        assert_eq!(by_name("D4").unwrap(), dihedral(4));
        assert!(by_name("X3").is_none());
    }
}
