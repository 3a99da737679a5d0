/** Rata Die helpers for timeline windows (day 1 = 0001-01-01 Gregorian). */

const CUM_DAYS = [0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334];

export function isLeapYear(year: number): boolean {
  return (year % 4 === 0 && year % 100 !== 0) || year % 400 === 0;
}

export function rataDie(year: number, month: number, day: number): number {
  const y = year - 1;
  const beforeYear = 365 * y + Math.floor(y / 4) - Math.floor(y / 100) + Math.floor(y / 400);
  const beforeMonth = (CUM_DAYS[month - 1] ?? 0) + (month > 2 && isLeapYear(year) ? 1 : 0);
  return beforeYear + beforeMonth + day;
}

export function yearStart(year: number): number {
  return rataDie(year, 1, 1);
}

export function yearEnd(year: number): number {
  return rataDie(year, 12, 31);
}

/** Calendar year containing an ordinal day (good enough for axis labels). */
export function ordinalToYear(ordinal: number): number {
  let year = Math.max(1, Math.floor(ordinal / 365.2425));
  while (yearStart(year) > ordinal) year -= 1;
  while (yearEnd(year) < ordinal) year += 1;
  return year;
}
